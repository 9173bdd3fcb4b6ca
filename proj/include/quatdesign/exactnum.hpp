#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact scalars: big rationals and elements a + b*rho of the real
 *        quadratic fields Q(sqrt2), Q(sqrt5) = Q(tau) and Q(sqrt3).
 *
 * An element is stored as the pair (a, b) over the basis (1, rho) where
 *   SQRT2  : rho^2 = 2
 *   GOLDEN : rho^2 = rho + 1   (rho = tau = (1 + sqrt5)/2)
 *   SQRT3  : rho^2 = 3
 * so that the rings of integers Z[sqrt2], Z[tau] are exactly the pairs with
 * integer components. RAT elements always have b == 0 and promote into any
 * other field on contact.
 */

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace quatdesign {

// Expression templates off: generic code freely uses auto on arithmetic results.
using bigint = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

// ---------------------------------------------------------------------------
// wide_int: overflow-checked 128-bit integer for hot accumulation loops.
// ---------------------------------------------------------------------------

class wide_int {
public:
    constexpr wide_int() = default;
    constexpr wide_int(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr wide_int from_raw(__int128 v) {
        wide_int w;
        w.v_ = v;
        return w;
    }
    constexpr __int128 raw() const { return v_; }

    friend wide_int operator+(wide_int x, wide_int y) {
        __int128 r;
        if (__builtin_add_overflow(x.v_, y.v_, &r)) throw arithmetic_overflow("wide_int addition overflow");
        return from_raw(r);
    }
    friend wide_int operator-(wide_int x, wide_int y) {
        __int128 r;
        if (__builtin_sub_overflow(x.v_, y.v_, &r)) throw arithmetic_overflow("wide_int subtraction overflow");
        return from_raw(r);
    }
    friend wide_int operator*(wide_int x, wide_int y) {
        __int128 r;
        if (__builtin_mul_overflow(x.v_, y.v_, &r)) throw arithmetic_overflow("wide_int multiplication overflow");
        return from_raw(r);
    }
    wide_int operator-() const { return wide_int{} - *this; }
    wide_int& operator+=(wide_int o) { return *this = *this + o; }
    wide_int& operator-=(wide_int o) { return *this = *this - o; }
    wide_int& operator*=(wide_int o) { return *this = *this * o; }

    friend constexpr bool operator==(wide_int x, wide_int y) { return x.v_ == y.v_; }
    friend constexpr std::strong_ordering operator<=>(wide_int x, wide_int y) { return x.v_ <=> y.v_; }

    bigint to_bigint() const {
        const bool neg = v_ < 0;
        unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
        bigint r = static_cast<std::uint64_t>(mag >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(mag);
        return neg ? bigint(-r) : r;
    }

private:
    __int128 v_ = 0;
};

// Uniform helpers over the scalar component types.
inline int sgn(const bigint& x) { return x.sign(); }
inline int sgn(const rational& x) { return x.sign(); }
inline int sgn(wide_int x) { return x.raw() > 0 ? 1 : (x.raw() < 0 ? -1 : 0); }
inline int sgn(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline rational to_rational(const rational& x) { return x; }
inline rational to_rational(const bigint& x) { return rational(x); }
inline rational to_rational(wide_int x) { return rational(x.to_bigint()); }
inline rational to_rational(long long x) { return rational(x); }

inline bigint to_bigint(const bigint& x) { return x; }
inline bigint to_bigint(wide_int x) { return x.to_bigint(); }
inline bigint to_bigint(long long x) { return bigint(x); }

/// "p/q" when force_fraction or q != 1, else "p".
inline std::string to_string(const rational& r, bool force_fraction = false) {
    std::string s = boost::multiprecision::numerator(r).str();
    const bigint& den = boost::multiprecision::denominator(r);
    if (force_fraction || den != 1) s += "/" + den.str();
    return s;
}

/// Parses "p", "-p" or "p/q" with decimal digits; nullopt on malformed text or q == 0.
inline std::optional<rational> parse_rational(std::string_view text) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    if (num.front() == '+') num.remove_prefix(1);
    bigint n{std::string(num)};
    bigint d{std::string(den)};
    if (d == 0) return std::nullopt;
    return rational(n, d);
}

// ---------------------------------------------------------------------------
// Field tags
// ---------------------------------------------------------------------------

enum class field : std::uint8_t { rat, sqrt2, golden, sqrt3 };

/// rho^2 = p + q*rho.
struct structure_constants {
    int p;
    int q;
};

constexpr structure_constants structure(field f) {
    switch (f) {
        case field::sqrt2: return {2, 0};
        case field::golden: return {1, 1};
        case field::sqrt3: return {3, 0};
        case field::rat: break;
    }
    return {0, 0};
}

constexpr std::string_view field_name(field f) {
    switch (f) {
        case field::rat: return "RAT";
        case field::sqrt2: return "SQRT2";
        case field::golden: return "GOLDEN";
        case field::sqrt3: return "SQRT3";
    }
    return "?";
}

/// Symbol used for rho in text output.
constexpr std::string_view rho_symbol(field f) {
    switch (f) {
        case field::sqrt2: return "sqrt2";
        case field::golden: return "tau";
        case field::sqrt3: return "sqrt3";
        case field::rat: break;
    }
    return "";
}

constexpr double rho_value(field f) {
    switch (f) {
        case field::sqrt2: return 1.4142135623730950488;
        case field::golden: return 1.6180339887498948482;
        case field::sqrt3: return 1.7320508075688772935;
        case field::rat: break;
    }
    return 0.0;
}

inline std::optional<field> parse_field(std::string_view s) {
    for (field f : {field::rat, field::sqrt2, field::golden, field::sqrt3})
        if (s == field_name(f)) return f;
    return std::nullopt;
}

/// Smallest field containing both; RAT is a subfield of all.
inline field join(field x, field y) {
    if (x == y || y == field::rat) return x;
    if (x == field::rat) return y;
    throw field_mismatch(std::string("field tag mismatch: ") + std::string(field_name(x)) + " vs " +
                         std::string(field_name(y)));
}

// ---------------------------------------------------------------------------
// basic_quad<T>: a + b*rho with components in T (rational, bigint, wide_int, long long)
// ---------------------------------------------------------------------------

template <class T>
class basic_quad {
public:
    using component_type = T;

    basic_quad() : a_(0), b_(0) {}
    basic_quad(T a) : a_(std::move(a)), b_(0) {}  // NOLINT(google-explicit-constructor)
    basic_quad(long long a) requires(!std::is_same_v<T, long long>) : a_(a), b_(0) {}  // NOLINT
    basic_quad(field f, T a, T b) : tag_(f), a_(std::move(a)), b_(std::move(b)) {
        if (tag_ == field::rat && sgn(b_) != 0) throw precondition_error("RAT element with nonzero rho part");
    }

    static basic_quad rho(field f) { return basic_quad(f, T(0), T(1)); }

    field tag() const { return tag_; }
    const T& a() const { return a_; }
    const T& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Same value viewed in field f (f must contain the current field).
    basic_quad in_field(field f) const { return basic_quad(join(f, tag_), a_, b_); }

    basic_quad operator-() const { return basic_quad(tag_, -a_, -b_); }

    friend basic_quad operator+(const basic_quad& x, const basic_quad& y) {
        return basic_quad(join(x.tag_, y.tag_), x.a_ + y.a_, x.b_ + y.b_);
    }
    friend basic_quad operator-(const basic_quad& x, const basic_quad& y) {
        return basic_quad(join(x.tag_, y.tag_), x.a_ - y.a_, x.b_ - y.b_);
    }
    friend basic_quad operator*(const basic_quad& x, const basic_quad& y) {
        const field f = join(x.tag_, y.tag_);
        if (f == field::rat) return basic_quad(x.a_ * y.a_);
        if (sgn(y.b_) == 0) return basic_quad(f, x.a_ * y.a_, x.b_ * y.a_);
        if (sgn(x.b_) == 0) return basic_quad(f, x.a_ * y.a_, x.a_ * y.b_);
        const auto [p, q] = structure(f);
        T bd = x.b_ * y.b_;
        T a = x.a_ * y.a_ + T(p) * bd;
        T b = x.a_ * y.b_ + x.b_ * y.a_;
        if (q != 0) b = b + T(q) * bd;
        return basic_quad(f, std::move(a), std::move(b));
    }
    friend basic_quad operator*(const basic_quad& x, const T& s) { return basic_quad(x.tag_, x.a_ * s, x.b_ * s); }
    friend basic_quad operator*(const T& s, const basic_quad& x) { return x * s; }

    basic_quad& operator+=(const basic_quad& y) { return *this = *this + y; }
    basic_quad& operator-=(const basic_quad& y) { return *this = *this - y; }
    basic_quad& operator*=(const basic_quad& y) { return *this = *this * y; }

    /// Galois conjugate a + b*rho' where rho' = q - rho.
    basic_quad conj() const {
        const auto [p, q] = structure(tag_);
        return basic_quad(tag_, a_ + T(q) * b_, -b_);
    }

    /// Field norm a^2 + q*a*b - p*b^2.
    T norm() const {
        const auto [p, q] = structure(tag_);
        T n = a_ * a_ - T(p) * b_ * b_;
        if (q != 0) n = n + T(q) * a_ * b_;
        return n;
    }

    friend bool operator==(const basic_quad& x, const basic_quad& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return sgn(x.b_) == 0 || x.tag_ == y.tag_;
    }

    double to_double() const {
        return static_cast<double>(to_rational(a_)) + static_cast<double>(to_rational(b_)) * rho_value(tag_);
    }

private:
    field tag_ = field::rat;
    T a_;
    T b_;
};

using quad = basic_quad<rational>;
using zquad = basic_quad<bigint>;

/// Division uses the Galois conjugate: x / y = x * conj(y) / N(y).
inline quad inverse(const quad& y) {
    if (y.is_zero()) throw precondition_error("division by zero");
    const rational n = y.norm();
    const quad c = y.conj();
    return quad(y.tag(), c.a() / n, c.b() / n);
}
inline quad operator/(const quad& x, const quad& y) { return x * inverse(y); }
inline rational inverse(const rational& y) {
    if (y == 0) throw precondition_error("division by zero");
    return 1 / y;
}

/// Rational projection a + b*rho -> a.
template <class T>
const T& iota(const basic_quad<T>& x) {
    return x.a();
}

/**
 * Exact sign of the real embedding. Only rational arithmetic is used: an
 * interval [lo, hi] containing rho (initially [1, 2]) is bisected until
 * a + b*lo and a + b*hi agree in sign. Terminates because rho is irrational.
 */
template <class T>
int quad_sign(const basic_quad<T>& x) {
    const int sa = sgn(x.a());
    const int sb = sgn(x.b());
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const auto [p, q] = structure(x.tag());
    const rational a = to_rational(x.a());
    const rational b = to_rational(x.b());
    rational lo = 1;
    rational hi = 2;
    for (;;) {
        const int s_lo = sgn(rational(a + b * lo));
        const int s_hi = sgn(rational(a + b * hi));
        if (s_lo == s_hi && s_lo != 0) return s_lo;
        rational mid = (lo + hi) / 2;
        if (sgn(rational(mid * mid - q * mid - p)) < 0)
            lo = mid;
        else
            hi = mid;
    }
}

template <class T>
int compare_values(const basic_quad<T>& x, const basic_quad<T>& y) {
    return quad_sign(x - y);
}

/// Orders by real value.
struct value_less {
    template <class T>
    bool operator()(const basic_quad<T>& x, const basic_quad<T>& y) const {
        return compare_values(x, y) < 0;
    }
};

/// Orders by components (a, b); cheap, tag-agnostic, not the real order.
struct component_less {
    template <class T>
    bool operator()(const basic_quad<T>& x, const basic_quad<T>& y) const {
        if (x.a() != y.a()) return x.a() < y.a();
        return x.b() < y.b();
    }
};

inline std::string to_string(const quad& x) {
    if (x.is_rational()) return to_string(x.a());
    std::string b = to_string(abs(x.b()));
    std::string rho(rho_symbol(x.tag()));
    std::string term = (b == "1" ? rho : b + "*" + rho);
    if (x.a() == 0) return (x.b() < 0 ? "-" : "") + term;
    return to_string(x.a()) + (x.b() < 0 ? " - " : " + ") + term;
}

template <class T>
std::size_t hash_component(const T& v) {
    if constexpr (std::is_same_v<T, long long>)
        return std::hash<long long>{}(v);
    else if constexpr (std::is_same_v<T, wide_int>)
        return std::hash<long long>{}(static_cast<long long>(v.raw())) ^
               (std::hash<long long>{}(static_cast<long long>(v.raw() >> 64)) << 1);
    else
        return std::hash<std::string>{}(v.str());
}

struct quad_hash {
    template <class T>
    std::size_t operator()(const basic_quad<T>& x) const {
        return hash_component(x.a()) * 1000003u ^ hash_component(x.b());
    }
};

/// Converts component type (e.g. integer to rational).
template <class To, class From>
basic_quad<To> convert(const basic_quad<From>& x) {
    auto cv = [](const From& v) -> To {
        if constexpr (std::is_same_v<To, rational>)
            return to_rational(v);
        else if constexpr (std::is_same_v<To, bigint>)
            return to_bigint(v);
        else
            return To(v);
    };
    return basic_quad<To>(x.tag(), cv(x.a()), cv(x.b()));
}

}  // namespace quatdesign
