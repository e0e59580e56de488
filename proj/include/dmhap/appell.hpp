#pragma once

#include <dmhap/series.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace dmhap {

// Requested an operator (multiplicative/log-derivative path) for a family
// whose determining series vanishes at the origin.
struct UnsupportedOperatorError : std::domain_error {
    using std::domain_error::domain_error;
};

// Provider of a determining series A(xi) = sum A_k xi^k / k!. The built-in
// members are generated from their closed forms; custom families are given
// by an explicit number list.
class AppellFamily {
public:
    static AppellFamily identity();
    static AppellFamily bernoulli(); // xi/(e^xi - 1)
    static AppellFamily euler();     // 2/(e^xi + 1)
    static AppellFamily genocchi();  // 2 xi/(e^xi + 1); A_0 = 0
    static AppellFamily custom(std::string name, std::vector<Rational> numbers);
    // "identity" | "bernoulli" | "euler" | "genocchi"; throws otherwise.
    static AppellFamily by_name(const std::string& name);

    const std::string& name() const { return name_; }
    Rational a0() const;
    bool supports_operators() const { return a0() != 0; }

    // A(xi) truncated at `order`.
    Series<Rational> series(int order) const;
    // A_0..A_max_index.
    std::vector<Rational> numbers(int max_index) const;
    // A'(xi)/A(xi) truncated at `order`; needs A(0) != 0.
    Series<Rational> log_derivative(int order) const;
    // Classical polynomial A_n(l1): coefficient of xi^n/n! in A(xi) e^{l1 xi}.
    MultiPoly classical_poly(int n) const;

private:
    enum class Kind { Identity, Bernoulli, Euler, Genocchi, Custom };
    AppellFamily(Kind kind, std::string name, std::vector<Rational> numbers = {})
        : kind_(kind), name_(std::move(name)), custom_numbers_(std::move(numbers)) {}

    Kind kind_;
    std::string name_;
    std::vector<Rational> custom_numbers_;
};

// Integer Euler numbers from 2 e^xi / (e^{2 xi} + 1); distinct from
// numbers(euler), which are the coefficients of 2/(e^xi + 1).
std::vector<Rational> euler_integer_numbers(int max_index);

} // namespace dmhap
