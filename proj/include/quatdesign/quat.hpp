#pragma once

/**
 * @file quat.hpp
 * @brief Hamilton quaternions x1 + x2 i + x3 j + x4 k over an exact scalar.
 *
 * Conventions: i^2 = j^2 = -1, ij = k = -ji. A quaternion is identified
 * with the row vector (x1, x2, x3, x4); left multiplication y -> x y is the
 * row-vector product y * M_x.
 */

#include "exactnum.hpp"
#include "poly.hpp"

#include <array>

namespace quatdesign {

template <class S>
struct basic_quaternion {
    std::array<S, 4> x{};

    basic_quaternion() : x{S(0), S(0), S(0), S(0)} {}
    basic_quaternion(S x1, S x2, S x3, S x4) : x{std::move(x1), std::move(x2), std::move(x3), std::move(x4)} {}

    static basic_quaternion one() { return {S(1), S(0), S(0), S(0)}; }
    static basic_quaternion unit_i() { return {S(0), S(1), S(0), S(0)}; }
    static basic_quaternion unit_j() { return {S(0), S(0), S(1), S(0)}; }
    static basic_quaternion unit_k() { return {S(0), S(0), S(0), S(1)}; }

    const S& operator[](std::size_t k) const { return x[k]; }
    S& operator[](std::size_t k) { return x[k]; }

    bool is_zero() const {
        for (const auto& c : x)
            if (!is_zero_value(c)) return false;
        return true;
    }

    friend basic_quaternion operator+(const basic_quaternion& p, const basic_quaternion& q) {
        return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
    }
    friend basic_quaternion operator-(const basic_quaternion& p, const basic_quaternion& q) {
        return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]};
    }
    basic_quaternion operator-() const { return {-x[0], -x[1], -x[2], -x[3]}; }
    friend basic_quaternion operator*(const S& s, const basic_quaternion& p) {
        return {s * p[0], s * p[1], s * p[2], s * p[3]};
    }

    /// Hamilton product.
    friend basic_quaternion operator*(const basic_quaternion& p, const basic_quaternion& q) {
        const auto& [x1, x2, x3, x4] = p.x;
        const auto& [y1, y2, y3, y4] = q.x;
        return {x1 * y1 - x2 * y2 - x3 * y3 - x4 * y4, x2 * y1 + x1 * y2 - x4 * y3 + x3 * y4,
                x3 * y1 + x4 * y2 + x1 * y3 - x2 * y4, x4 * y1 - x3 * y2 + x2 * y3 + x1 * y4};
    }

    friend bool operator==(const basic_quaternion& p, const basic_quaternion& q) { return p.x == q.x; }
};

using quaternion = basic_quaternion<quad>;

template <class S>
basic_quaternion<S> qmul(const basic_quaternion<S>& p, const basic_quaternion<S>& q) {
    return p * q;
}

template <class S>
basic_quaternion<S> conj(const basic_quaternion<S>& p) {
    return {p[0], -p[1], -p[2], -p[3]};
}

/// Euclidean dot product x1 y1 + x2 y2 + x3 y3 + x4 y4.
template <class S>
S inner(const basic_quaternion<S>& p, const basic_quaternion<S>& q) {
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
}

/// Reduced norm N(x) = x conj(x).
template <class S>
S norm(const basic_quaternion<S>& p) {
    return inner(p, p);
}

/// Common field of the four coordinates.
inline field tag_of(const quaternion& p) {
    field f = field::rat;
    for (const auto& c : p.x) f = join(f, c.tag());
    return f;
}

struct quaternion_hash {
    std::size_t operator()(const quaternion& p) const {
        std::size_t h = 0;
        for (const auto& c : p.x) h = h * 31u + quad_hash{}(c);
        return h;
    }
};

/// Lexicographic on coordinates, each compared by real value.
struct quaternion_less {
    bool operator()(const quaternion& p, const quaternion& q) const {
        for (std::size_t k = 0; k < 4; ++k) {
            if (p[k] == q[k]) continue;
            return compare_values(p[k], q[k]) < 0;
        }
        return false;
    }
};

template <class S>
using matrix4 = std::array<std::array<S, 4>, 4>;

template <class S>
matrix4<S> identity4() {
    matrix4<S> m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m[r][c] = S(r == c ? 1 : 0);
    return m;
}

template <class S>
matrix4<S> matmul(const matrix4<S>& a, const matrix4<S>& b) {
    matrix4<S> m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            S acc(0);
            for (std::size_t k = 0; k < 4; ++k) acc = acc + a[r][k] * b[k][c];
            m[r][c] = acc;
        }
    return m;
}

template <class S>
matrix4<S> transpose(const matrix4<S>& a) {
    matrix4<S> m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m[r][c] = a[c][r];
    return m;
}

/// Row vector times matrix.
template <class S>
basic_quaternion<S> apply(const basic_quaternion<S>& y, const matrix4<S>& m) {
    basic_quaternion<S> r;
    for (std::size_t c = 0; c < 4; ++c) {
        S acc(0);
        for (std::size_t k = 0; k < 4; ++k) acc = acc + y[k] * m[k][c];
        r[c] = acc;
    }
    return r;
}

/**
 * Matrix M_x with x y = y M_x for all y. Defined for unit quaternions only,
 * so no square root of N(x) is ever taken.
 */
template <class S>
matrix4<S> to_matrix(const basic_quaternion<S>& p) {
    if (!(norm(p) == S(1))) throw precondition_error("to_matrix requires a unit quaternion");
    const auto& [x1, x2, x3, x4] = p.x;
    return {{{x1, x2, x3, x4}, {-x2, x1, x4, -x3}, {-x3, -x4, x1, x2}, {-x4, x3, -x2, x1}}};
}

/// det(I - u C_x) = 1 - 2 x1 u + u^2 for a unit quaternion x.
template <class S>
upoly<S> su2_factor(const basic_quaternion<S>& p) {
    if (!(norm(p) == S(1))) throw precondition_error("su2_factor requires a unit quaternion");
    return upoly<S>{S(1), S(-2) * p[0], S(1)};
}

inline std::string to_string(const quaternion& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < 4; ++k) s += (k ? ", " : "") + to_string(p[k]);
    return s + ")";
}

}  // namespace quatdesign
