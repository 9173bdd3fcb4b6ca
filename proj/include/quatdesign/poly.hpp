#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials and truncated power series over an
 *        exact scalar (rational or quad).
 */

#include "exactnum.hpp"

#include <initializer_list>
#include <vector>

namespace quatdesign {

inline bool is_zero_value(const rational& x) { return x == 0; }
template <class T>
bool is_zero_value(const basic_quad<T>& x) {
    return x.is_zero();
}

/// Polynomial in one variable; coefficients indexed by degree, trailing zeros trimmed.
template <class S>
class upoly {
public:
    using scalar_type = S;

    upoly() = default;
    upoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }
    explicit upoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static upoly constant(S v) { return upoly(std::vector<S>{std::move(v)}); }
    static upoly monomial(int degree, S v = S(1)) {
        std::vector<S> c(static_cast<std::size_t>(degree) + 1, S(0));
        c.back() = std::move(v);
        return upoly(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of s^k (zero beyond the degree).
    S operator[](int k) const { return (k >= 0 && k <= degree()) ? c_[static_cast<std::size_t>(k)] : S(0); }
    const std::vector<S>& coefficients() const { return c_; }

    S leading() const { return c_.empty() ? S(0) : c_.back(); }

    S eval(const S& s) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
        return acc;
    }

    friend upoly operator+(const upoly& x, const upoly& y) {
        std::vector<S> c(std::max(x.c_.size(), y.c_.size()), S(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) c[i] = x.c_[i];
        for (std::size_t i = 0; i < y.c_.size(); ++i) c[i] = c[i] + y.c_[i];
        return upoly(std::move(c));
    }
    friend upoly operator-(const upoly& x) {
        std::vector<S> c = x.c_;
        for (auto& v : c) v = -v;
        return upoly(std::move(c));
    }
    friend upoly operator-(const upoly& x, const upoly& y) { return x + (-y); }
    friend upoly operator*(const upoly& x, const upoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<S> c(x.c_.size() + y.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (is_zero_value(x.c_[i])) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] = c[i + j] + x.c_[i] * y.c_[j];
        }
        return upoly(std::move(c));
    }
    friend upoly operator*(const upoly& x, const S& s) {
        std::vector<S> c = x.c_;
        for (auto& v : c) v = v * s;
        return upoly(std::move(c));
    }
    friend upoly operator*(const S& s, const upoly& x) { return x * s; }

    upoly& operator+=(const upoly& y) { return *this = *this + y; }
    upoly& operator-=(const upoly& y) { return *this = *this - y; }

    friend bool operator==(const upoly& x, const upoly& y) { return x.c_ == y.c_; }

    upoly pow(unsigned e) const {
        upoly r = constant(S(1));
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

/// The polynomial s.
template <class S>
upoly<S> poly_var() {
    return upoly<S>::monomial(1);
}

/// Truncated power series c_0 + c_1 u + ... + c_N u^N; arithmetic is exact up to order N.
template <class S>
class power_series {
public:
    using scalar_type = S;

    explicit power_series(int truncation = 0) : c_(static_cast<std::size_t>(truncation) + 1, S(0)) {}
    power_series(const upoly<S>& p, int truncation) : power_series(truncation) {
        for (int k = 0; k <= std::min(truncation, p.degree()); ++k) c_[static_cast<std::size_t>(k)] = p[k];
    }

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const S& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    S& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<S>& coefficients() const { return c_; }

    friend power_series operator+(const power_series& x, const power_series& y) {
        power_series r(std::min(x.truncation(), y.truncation()));
        for (int k = 0; k <= r.truncation(); ++k) r[k] = x[k] + y[k];
        return r;
    }
    friend power_series operator-(const power_series& x, const power_series& y) {
        power_series r(std::min(x.truncation(), y.truncation()));
        for (int k = 0; k <= r.truncation(); ++k) r[k] = x[k] - y[k];
        return r;
    }
    friend power_series operator*(const power_series& x, const power_series& y) {
        power_series r(std::min(x.truncation(), y.truncation()));
        const int n = r.truncation();
        for (int i = 0; i <= n; ++i) {
            if (is_zero_value(x[i])) continue;
            for (int j = 0; i + j <= n; ++j) r[i + j] = r[i + j] + x[i] * y[j];
        }
        return r;
    }
    friend power_series operator*(const power_series& x, const S& s) {
        power_series r = x;
        for (auto& v : r.c_) v = v * s;
        return r;
    }

    power_series& operator+=(const power_series& y) { return *this = *this + y; }

    friend bool operator==(const power_series& x, const power_series& y) { return x.c_ == y.c_; }

    /// 1/x; requires an invertible constant term.
    power_series reciprocal() const {
        if (is_zero_value(c_[0])) throw precondition_error("power series reciprocal of a non-unit");
        const S inv0 = inverse(c_[0]);
        power_series r(truncation());
        r[0] = inv0;
        for (int n = 1; n <= truncation(); ++n) {
            S acc(0);
            for (int k = 1; k <= n; ++k)
                if (!is_zero_value(c_[static_cast<std::size_t>(k)])) acc = acc + c_[static_cast<std::size_t>(k)] * r[n - k];
            r[n] = -(acc * inv0);
        }
        return r;
    }

private:
    std::vector<S> c_;
};

}  // namespace quatdesign
