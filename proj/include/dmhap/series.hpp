#pragma once

#include <dmhap/multipoly.hpp>
#include <dmhap/rational.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace dmhap {

// Ring hooks the series engine needs. zero/one take a sample element so
// context-dependent rings (MultiPoly carries its dimension) work.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& a) { return a == 0; }
    static std::optional<Rational> inverse(const Rational& a) {
        if (a == 0) return std::nullopt;
        return Rational(1) / a;
    }
};

template <>
struct RingTraits<MultiPoly> {
    static MultiPoly zero_like(const MultiPoly& s) { return MultiPoly::zero(s.dims()); }
    static MultiPoly one_like(const MultiPoly& s) { return MultiPoly::constant(s.dims(), 1); }
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static std::optional<MultiPoly> inverse(const MultiPoly& a) { return a.inverse(); }
};

// Formal power series in xi truncated at a fixed order: coefficients of
// xi^0..xi^N, stored plain (not divided by factorials). Mixed-order
// arithmetic truncates to the smaller order.
template <class R>
class Series {
public:
    using traits = RingTraits<R>;

    static Series make(std::vector<R> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least the constant term");
        return Series(std::move(coeffs));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int k) const { return c_.at(k); }
    const std::vector<R>& coeffs() const { return c_; }

    bool operator==(const Series&) const = default;

    Series truncated(int new_order) const {
        if (new_order < 0 || new_order > order())
            throw std::out_of_range("truncated: order out of range");
        return Series(std::vector<R>(c_.begin(), c_.begin() + new_order + 1));
    }

    // n! * coeff[n]: the xi^n/n! normalization used by generating relations.
    R extract(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("extract: beyond truncation");
        return c_[n] * Rational(factorial(n));
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<R> c;
        c.reserve(n + 1);
        for (int k = 0; k <= n; ++k) c.push_back(a.c_[k] + b.c_[k]);
        return Series(std::move(c));
    }

    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<R> c;
        c.reserve(n + 1);
        for (int k = 0; k <= n; ++k) c.push_back(a.c_[k] - b.c_[k]);
        return Series(std::move(c));
    }

    // Cauchy product truncated to the smaller order.
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        std::vector<R> c;
        c.reserve(n + 1);
        for (int k = 0; k <= n; ++k) {
            R s = traits::zero_like(a.c_[0]);
            for (int i = 0; i <= k; ++i) s = s + a.c_[i] * b.c_[k - i];
            c.push_back(std::move(s));
        }
        return Series(std::move(c));
    }

    // Coefficientwise scaling by an exact rational.
    Series scaled(const Rational& q) const {
        std::vector<R> c;
        c.reserve(c_.size());
        for (const R& a : c_) c.push_back(a * q);
        return Series(std::move(c));
    }

    // Substitution xi -> c*xi.
    Series scaled_arg(const R& c) const {
        std::vector<R> out;
        out.reserve(c_.size());
        R p = traits::one_like(c_[0]);
        for (int k = 0; k <= order(); ++k) {
            out.push_back(c_[k] * p);
            if (k < order()) p = p * c;
        }
        return Series(std::move(out));
    }

    // d/dxi; drops the order by one (a constant stays order 0).
    Series derivative() const {
        if (order() == 0) return Series({traits::zero_like(c_[0])});
        std::vector<R> out;
        out.reserve(c_.size() - 1);
        for (int k = 1; k <= order(); ++k) out.push_back(c_[k] * Rational(k));
        return Series(std::move(out));
    }

private:
    explicit Series(std::vector<R> c) : c_(std::move(c)) {}
    std::vector<R> c_;
};

// Multiplicative inverse; needs a unit constant term.
template <class R>
Series<R> inverse(const Series<R>& a) {
    auto b0 = RingTraits<R>::inverse(a.coeff(0));
    if (!b0) throw std::domain_error("non-unit constant term");
    std::vector<R> b{*b0};
    for (int n = 1; n <= a.order(); ++n) {
        R s = RingTraits<R>::zero_like(a.coeff(0));
        for (int k = 1; k <= n; ++k) s = s + a.coeff(k) * b[n - k];
        b.push_back((*b0 * s) * Rational(-1));
    }
    return Series<R>::make(std::move(b));
}

// exp of a series with zero constant term, via the derivative recurrence
// n*g_n = sum_{k=1..n} k*a_k*g_{n-k}.
template <class R>
Series<R> exponential(const Series<R>& a) {
    if (!RingTraits<R>::is_zero(a.coeff(0)))
        throw std::domain_error("nonzero constant term in exp");
    std::vector<R> g{RingTraits<R>::one_like(a.coeff(0))};
    for (int n = 1; n <= a.order(); ++n) {
        R s = RingTraits<R>::zero_like(a.coeff(0));
        for (int k = 1; k <= n; ++k) s = s + a.coeff(k) * Rational(k) * g[n - k];
        g.push_back(s * Rational(1, n));
    }
    return Series<R>::make(std::move(g));
}

// Embed a rational-coefficient series into the polynomial ring.
inline Series<MultiPoly> lift(const Series<Rational>& a, int dims) {
    std::vector<MultiPoly> c;
    c.reserve(a.order() + 1);
    for (int k = 0; k <= a.order(); ++k) c.push_back(MultiPoly::constant(dims, a.coeff(k)));
    return Series<MultiPoly>::make(std::move(c));
}

// e^{c xi} truncated at `order`.
inline Series<Rational> exp_series(int order, const Rational& c = 1) {
    std::vector<Rational> v(order + 1, Rational(0));
    if (order >= 1) v[1] = c;
    Series<Rational> lin = Series<Rational>::make(std::move(v));
    return exponential(lin);
}

} // namespace dmhap
