#include <dmhap/appell.hpp>

namespace dmhap {
namespace {

// (e^xi - 1)/xi: coefficients 1/(k+1)!.
Series<Rational> expm1_over_xi(int order) {
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (int k = 0; k <= order; ++k) c.emplace_back(1, factorial(k + 1));
    return Series<Rational>::make(std::move(c));
}

Series<Rational> euler_series(int order) {
    Series<Rational> e = exp_series(order);
    std::vector<Rational> c = e.coeffs();
    c[0] += 1; // e^xi + 1
    return inverse(Series<Rational>::make(std::move(c))).scaled(2);
}

} // namespace

AppellFamily AppellFamily::identity() { return {Kind::Identity, "identity"}; }
AppellFamily AppellFamily::bernoulli() { return {Kind::Bernoulli, "bernoulli"}; }
AppellFamily AppellFamily::euler() { return {Kind::Euler, "euler"}; }
AppellFamily AppellFamily::genocchi() { return {Kind::Genocchi, "genocchi"}; }

AppellFamily AppellFamily::custom(std::string name, std::vector<Rational> numbers) {
    if (numbers.empty()) throw std::invalid_argument("custom family needs at least A_0");
    return {Kind::Custom, std::move(name), std::move(numbers)};
}

AppellFamily AppellFamily::by_name(const std::string& name) {
    if (name == "identity") return identity();
    if (name == "bernoulli") return bernoulli();
    if (name == "euler") return euler();
    if (name == "genocchi") return genocchi();
    if (name == "custom")
        throw std::invalid_argument("custom family requires an explicit coefficient list");
    throw std::invalid_argument("unknown family '" + name + "'");
}

Rational AppellFamily::a0() const {
    switch (kind_) {
        case Kind::Genocchi: return 0;
        case Kind::Custom: return custom_numbers_[0];
        default: return 1;
    }
}

Series<Rational> AppellFamily::series(int order) const {
    if (order < 0) throw std::invalid_argument("negative series order");
    switch (kind_) {
        case Kind::Identity: {
            std::vector<Rational> c(order + 1, Rational(0));
            c[0] = 1;
            return Series<Rational>::make(std::move(c));
        }
        case Kind::Bernoulli:
            return inverse(expm1_over_xi(order));
        case Kind::Euler:
            return euler_series(order);
        case Kind::Genocchi: {
            // 2 xi/(e^xi + 1): the Euler series shifted up one power.
            Series<Rational> e = euler_series(order);
            std::vector<Rational> c(order + 1, Rational(0));
            for (int k = 1; k <= order; ++k) c[k] = e.coeff(k - 1);
            return Series<Rational>::make(std::move(c));
        }
        case Kind::Custom: {
            std::vector<Rational> c(order + 1, Rational(0));
            for (int k = 0; k <= order && k < static_cast<int>(custom_numbers_.size()); ++k)
                c[k] = custom_numbers_[k] / Rational(factorial(k));
            return Series<Rational>::make(std::move(c));
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Rational> AppellFamily::numbers(int max_index) const {
    Series<Rational> s = series(max_index);
    std::vector<Rational> out;
    out.reserve(max_index + 1);
    for (int k = 0; k <= max_index; ++k) out.push_back(s.extract(k));
    return out;
}

Series<Rational> AppellFamily::log_derivative(int order) const {
    if (!supports_operators())
        throw UnsupportedOperatorError(
            "A(0)=0: log-derivative has a pole; operators unsupported for family '" + name_ + "'");
    Series<Rational> a = series(order + 1);
    return a.derivative() * inverse(series(order));
}

MultiPoly AppellFamily::classical_poly(int n) const {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<MultiPoly> lin(n + 1, MultiPoly::zero(1));
    if (n >= 1) lin[1] = MultiPoly::var_l(1, 1);
    Series<MultiPoly> kernel = exponential(Series<MultiPoly>::make(std::move(lin)));
    return (lift(series(n), 1) * kernel).extract(n);
}

std::vector<Rational> euler_integer_numbers(int max_index) {
    // 2 e^xi / (e^{2 xi} + 1)
    Series<Rational> e = exp_series(max_index);
    std::vector<Rational> d = exp_series(max_index, 2).coeffs();
    d[0] += 1;
    Series<Rational> s = e.scaled(2) * inverse(Series<Rational>::make(std::move(d)));
    std::vector<Rational> out;
    out.reserve(max_index + 1);
    for (int k = 0; k <= max_index; ++k) out.push_back(s.extract(k));
    return out;
}

} // namespace dmhap
