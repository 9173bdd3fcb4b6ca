#pragma once

// JSON encoding of exact values and point sets, plus the csv/text renderers
// used by the command-line tool. Rationals are always "p/q" strings.

#include "groups.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace quatdesign {

using json = nlohmann::ordered_json;

enum class output_format { json, csv, text };

inline std::optional<output_format> parse_format(std::string_view s) {
    if (s == "json") return output_format::json;
    if (s == "csv") return output_format::csv;
    if (s == "text") return output_format::text;
    return std::nullopt;
}

inline json to_json(const rational& r) { return to_string(r, true); }
inline json to_json(const bigint& n) { return n.str(); }

inline json to_json(const quad& x) {
    return json{{"tag", std::string(field_name(x.tag()))}, {"a", to_string(x.a(), true)}, {"b", to_string(x.b(), true)}};
}

inline json to_json(const quaternion& q) {
    json a = json::array();
    for (std::size_t k = 0; k < 4; ++k) a.push_back(to_json(q[k]));
    return a;
}

inline json to_json(const point_list& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

inline rational rational_from_json(const json& j) {
    if (!j.is_string()) throw precondition_error("rational must be a \"p/q\" string");
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw precondition_error("malformed rational '" + j.get<std::string>() + "'");
    return *r;
}

inline quad quad_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tag") || !j.contains("a") || !j.contains("b"))
        throw precondition_error("field element must be an object with tag, a and b");
    const auto tag = parse_field(j.at("tag").get<std::string>());
    if (!tag) throw precondition_error("unknown field tag '" + j.at("tag").get<std::string>() + "'");
    const rational a = rational_from_json(j.at("a")), b = rational_from_json(j.at("b"));
    if (*tag == field::rat && b != 0) throw precondition_error("RAT element with nonzero b");
    return quad(*tag, a, b);
}

inline quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw precondition_error("quaternion must be an array of four field elements");
    quaternion q;
    for (std::size_t k = 0; k < 4; ++k) q.x[k] = quad_from_json(j[k]);
    return q;
}

/// Accepts a bare array of quaternions or an object with a "points" (or "elements") array.
inline point_list points_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (j.contains("points")) arr = &j.at("points");
        else if (j.contains("elements")) arr = &j.at("elements");
        else throw precondition_error("point file needs a \"points\" array");
    }
    if (!arr->is_array()) throw precondition_error("point list must be an array");
    point_list pts;
    for (const auto& q : *arr) pts.push_back(quaternion_from_json(q));
    return pts;
}

inline point_list read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw precondition_error("invalid JSON in '" + path + "': " + e.what());
    }
    return points_from_json(j);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// Rows for csv output; the first row is the header.
using table = std::vector<std::vector<std::string>>;

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string render_csv(const table& t) {
    std::string out;
    for (const auto& row : t) {
        for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + csv_field(row[k]);
        out += "\n";
    }
    return out;
}

/// A field element in plain notation, e.g. "1/2*tau".
inline std::string plain(const json& j) {
    if (j.is_object() && j.contains("tag") && j.contains("a") && j.size() == 3) {
        try {
            return to_string(quad_from_json(j));
        } catch (const error&) {
        }
    }
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string s = "(";
        for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + plain(j[k]);
        return s + ")";
    }
    return j.dump();
}

namespace detail {
inline bool is_leaf_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_object() && !(e.contains("tag") && e.size() == 3)) return false;
    return true;
}

inline void render_text(const json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object() && !(value.contains("tag") && value.size() == 3)) {
            out += pad + key + ":\n";
            render_text(value, indent + 2, out);
        } else if (value.is_array() && !is_leaf_array(value)) {
            out += pad + key + ":\n";
            for (std::size_t k = 0; k < value.size(); ++k) {
                out += pad + "  [" + std::to_string(k) + "]\n";
                render_text(value[k], indent + 4, out);
            }
        } else if (value.is_array()) {
            out += pad + key + ":";
            for (const auto& e : value) out += " " + plain(e);
            out += "\n";
        } else {
            out += pad + key + ": " + plain(value) + "\n";
        }
    }
}
}  // namespace detail

inline std::string render_text(const json& j) {
    std::string out;
    detail::render_text(j, 0, out);
    return out;
}

inline std::string render(const json& j, const table& t, output_format f) {
    switch (f) {
        case output_format::json: return j.dump(2) + "\n";
        case output_format::csv: return render_csv(t);
        case output_format::text: return render_text(j);
    }
    return {};
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) {
        if constexpr (std::is_arithmetic_v<T>) out.push_back(std::to_string(x));
        else out.push_back(to_string(x));
    }
    return out;
}

}  // namespace quatdesign
