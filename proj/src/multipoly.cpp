#include <dmhap/multipoly.hpp>

#include <algorithm>
#include <stdexcept>

namespace dmhap {

MultiPoly MultiPoly::constant(int dims, const Rational& c) {
    MultiPoly p(dims);
    p.add_term(Monomial{std::vector<int>(dims, 0), 0}, c);
    return p;
}

MultiPoly MultiPoly::var_l(int dims, int j) {
    if (j < 1 || j > dims) throw std::invalid_argument("variable index out of range");
    Monomial m{std::vector<int>(dims, 0), 0};
    m.l_exp[j - 1] = 1;
    MultiPoly p(dims);
    p.add_term(std::move(m), 1);
    return p;
}

MultiPoly MultiPoly::lambda_power(int dims, int e) {
    MultiPoly p(dims);
    p.add_term(Monomial{std::vector<int>(dims, 0), e}, 1);
    return p;
}

MultiPoly MultiPoly::monomial(int dims, const Rational& c, std::vector<int> l_exp, int lambda_exp) {
    if (static_cast<int>(l_exp.size()) != dims)
        throw std::invalid_argument("monomial: exponent vector length != dims");
    for (int e : l_exp)
        if (e < 0) throw std::invalid_argument("monomial: negative l exponent");
    MultiPoly p(dims);
    p.add_term(Monomial{std::move(l_exp), lambda_exp}, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return m.lambda_exp == 0 && m.total_l_degree() == 0;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const {
    return coefficient(Monomial{std::vector<int>(dims_, 0), 0});
}

void MultiPoly::add_term(Monomial m, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::require_same_dims(const MultiPoly& o) const {
    if (dims_ != o.dims_) throw std::invalid_argument("polynomial dimension mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(dims_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_dims(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_dims(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_dims(o);
    MultiPoly p(dims_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m{ma.l_exp, ma.lambda_exp + mb.lambda_exp};
            for (int i = 0; i < dims_; ++i) m.l_exp[i] += mb.l_exp[i];
            p.add_term(std::move(m), ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly p(dims_);
    if (c == 0) return p;
    for (const auto& [m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
    return p;
}

MultiPoly MultiPoly::derivative_l(int j, int order) const {
    if (j < 1 || j > dims_) throw std::invalid_argument("derivative variable out of range");
    if (order < 0) throw std::invalid_argument("negative derivative order");
    MultiPoly p(dims_);
    for (const auto& [m, c] : terms_) {
        int e = m.l_exp[j - 1];
        if (e < order) continue;
        Monomial d = m;
        d.l_exp[j - 1] = e - order;
        p.add_term(std::move(d), c * Rational(falling_factorial(e, order)));
    }
    return p;
}

MultiPoly MultiPoly::mul_lambda(int shift) const {
    MultiPoly p(dims_);
    for (const auto& [m, c] : terms_)
        p.terms_.emplace(Monomial{m.l_exp, m.lambda_exp + shift}, c);
    return p;
}

MultiPoly MultiPoly::scale_vars(const Rational& c, std::span<const int> weights) const {
    if (static_cast<int>(weights.size()) != dims_)
        throw std::invalid_argument("scale_vars: weights length != dims");
    MultiPoly p(dims_);
    for (const auto& [m, coeff] : terms_) {
        long total = 0;
        for (int i = 0; i < dims_; ++i) total += static_cast<long>(m.l_exp[i]) * weights[i];
        p.add_term(m, coeff * pow_rational(c, total));
    }
    return p;
}

MultiPoly MultiPoly::subst_lambda(const Rational& v) const {
    MultiPoly p(dims_);
    for (const auto& [m, c] : terms_) {
        if (m.lambda_exp < 0 && v == 0)
            throw std::domain_error("pole at lambda=0");
        p.add_term(Monomial{m.l_exp, 0}, c * pow_rational(v, m.lambda_exp));
    }
    return p;
}

MultiPoly MultiPoly::with_dims(int new_dims) const {
    if (new_dims == dims_) return *this;
    MultiPoly p(new_dims);
    for (const auto& [m, c] : terms_) {
        Monomial ext{std::vector<int>(new_dims, 0), m.lambda_exp};
        for (int i = 0; i < dims_; ++i) {
            if (m.l_exp[i] != 0 && i >= new_dims)
                throw std::invalid_argument("with_dims would drop a used variable");
            if (i < new_dims) ext.l_exp[i] = m.l_exp[i];
        }
        p.terms_.emplace(std::move(ext), c);
    }
    return p;
}

std::optional<MultiPoly> MultiPoly::inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (m.total_l_degree() != 0) return std::nullopt;
    MultiPoly p(dims_);
    p.terms_.emplace(Monomial{m.l_exp, -m.lambda_exp}, Rational(1) / c);
    return p;
}

int MultiPoly::min_lambda_exp() const {
    int e = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first || m.lambda_exp < e) e = m.lambda_exp;
        first = false;
    }
    return e;
}

int MultiPoly::max_lambda_exp() const {
    int e = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first || m.lambda_exp > e) e = m.lambda_exp;
        first = false;
    }
    return e;
}

int MultiPoly::degree_l(int j) const {
    if (j < 1 || j > dims_) throw std::invalid_argument("variable index out of range");
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.l_exp[j - 1]);
    }
    return d;
}

int MultiPoly::total_l_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.total_l_degree());
    }
    return d;
}

Rational MultiPoly::eval_exact(std::span<const Rational> ls, const Rational& lambda) const {
    if (static_cast<int>(ls.size()) != dims_)
        throw std::invalid_argument("eval_exact: point length != dims");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c * pow_rational(lambda, m.lambda_exp);
        for (int i = 0; i < dims_; ++i) t *= pow_rational(ls[i], m.l_exp[i]);
        sum += t;
    }
    return sum;
}

} // namespace dmhap
