#pragma once

// Resource limits for shell enumeration and theta tables. Exceeding a limit
// raises resource_error before any work starts; nothing is truncated.

#include "errors.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

namespace quatdesign {

struct resource_budget {
    std::string name = "desk";
    long long max_shell_points = 2'000'000;  // sum of |O_{G,m}| over the requested shells
    long long max_theta_work = 500'000'000;  // shell points times monomials of degree l

    static resource_budget small() { return {"small", 200'000, 20'000'000}; }
    static resource_budget desk() { return {}; }
    static resource_budget large() { return {"large", 50'000'000, 50'000'000'000}; }
};

/// "small", "desk", "large", or "<points>,<work>".
inline std::optional<resource_budget> parse_budget(std::string_view s) {
    if (s == "small") return resource_budget::small();
    if (s == "desk") return resource_budget::desk();
    if (s == "large") return resource_budget::large();
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    try {
        std::size_t used = 0;
        const std::string a(s.substr(0, comma)), b(s.substr(comma + 1));
        const long long p = std::stoll(a, &used);
        if (used != a.size()) return std::nullopt;
        const long long w = std::stoll(b, &used);
        if (used != b.size() || p <= 0 || w <= 0) return std::nullopt;
        return resource_budget{std::string(s), p, w};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

namespace detail {
inline resource_budget& budget_slot() {
    static resource_budget b = [] {
        if (const char* env = std::getenv("QUATDESIGN_BUDGET"))
            if (auto parsed = parse_budget(env)) return *parsed;
        return resource_budget::desk();
    }();
    return b;
}
}  // namespace detail

inline const resource_budget& current_budget() { return detail::budget_slot(); }
inline void set_budget(const resource_budget& b) { detail::budget_slot() = b; }

}  // namespace quatdesign
