#pragma once

#include <dmhap/rational.hpp>

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace dmhap {

// Monomial key: one non-negative exponent per variable l_1..l_r plus a
// signed exponent of the slope symbol lambda = log(1+kappa)/kappa.
struct Monomial {
    std::vector<int> l_exp;
    int lambda_exp = 0;

    auto operator<=>(const Monomial&) const = default;

    int total_l_degree() const {
        int d = 0;
        for (int e : l_exp) d += e;
        return d;
    }
};

// Sparse exact polynomial in Q[l_1..l_r][lambda, lambda^-1].
// Zero coefficients are never stored; equality is structural.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int dims) : dims_(dims) {}

    static MultiPoly zero(int dims) { return MultiPoly(dims); }
    static MultiPoly constant(int dims, const Rational& c);
    static MultiPoly var_l(int dims, int j); // 1-based variable index
    static MultiPoly lambda_power(int dims, int e);
    static MultiPoly monomial(int dims, const Rational& c, std::vector<int> l_exp, int lambda_exp);

    int dims() const { return dims_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    bool operator==(const MultiPoly&) const = default;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;

    // d/dl_j applied `order` times.
    MultiPoly derivative_l(int j, int order = 1) const;
    // Multiply by lambda^shift (shift may be negative).
    MultiPoly mul_lambda(int shift) const;
    // l_j -> c^{weights[j-1]} * l_j.
    MultiPoly scale_vars(const Rational& c, std::span<const int> weights) const;
    // Substitute lambda = v; v = 0 with a negative lambda exponent is a pole.
    MultiPoly subst_lambda(const Rational& v) const;
    // Reinterpret over a ring with more (or fewer unused) variables.
    MultiPoly with_dims(int new_dims) const;
    // Multiplicative inverse; exists only for single terms c*lambda^e.
    std::optional<MultiPoly> inverse() const;

    int min_lambda_exp() const; // 0 for the zero polynomial
    int max_lambda_exp() const;
    int degree_l(int j) const;
    int total_l_degree() const;

    Rational eval_exact(std::span<const Rational> ls, const Rational& lambda) const;

private:
    int dims_ = 0;
    std::map<Monomial, Rational> terms_;

    void add_term(Monomial m, Rational c);
    void require_same_dims(const MultiPoly& o) const;
};

inline MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
inline MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

} // namespace dmhap
