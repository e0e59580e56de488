#include <dmhap/table.hpp>

#include <stdexcept>

namespace dmhap {

Series<MultiPoly> hermite_kernel(int dims, int order) {
    if (dims < 1) throw std::invalid_argument("dims must be >= 1");
    if (order < 0) throw std::invalid_argument("negative order");
    std::vector<MultiPoly> arg(order + 1, MultiPoly::zero(dims));
    for (int j = 1; j <= dims && j <= order; ++j)
        arg[j] = MultiPoly::var_l(dims, j).mul_lambda(1);
    return exponential(Series<MultiPoly>::make(std::move(arg)));
}

Table generate(const AppellFamily& family, int dims, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("negative max_degree");
    Series<MultiPoly> product = lift(family.series(max_degree), dims) * hermite_kernel(dims, max_degree);
    Table t{family.name(), dims, max_degree, {}};
    t.entries.reserve(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) t.entries.push_back(product.extract(n));
    return t;
}

MultiPoly apply_lowering(const MultiPoly& p) {
    return p.derivative_l(1).mul_lambda(-1);
}

MultiPoly apply_raising(const AppellFamily& family, int dims, const MultiPoly& p) {
    if (dims < 1) throw std::invalid_argument("dims must be >= 1");
    // The substituted log-derivative series terminates: lowering is
    // nilpotent past the l_1-degree of the argument.
    Series<Rational> ld = family.log_derivative(p.is_zero() ? 0 : p.degree_l(1));
    MultiPoly q = p.with_dims(dims);
    MultiPoly result = MultiPoly::var_l(dims, 1).mul_lambda(1) * q;
    for (int j = 2; j <= dims; ++j)
        result += MultiPoly::var_l(dims, j) * q.derivative_l(1, j - 1).mul_lambda(2 - j) * Rational(j);
    MultiPoly dk = q;
    for (int k = 0; k <= ld.order(); ++k) {
        if (k > 0) dk = apply_lowering(dk);
        if (dk.is_zero()) break;
        result += dk * ld.coeff(k);
    }
    return result;
}

MultiPoly mult_op_apply(const AppellFamily& family, int dims, int max_degree, int n) {
    if (n < 0 || n >= max_degree) throw std::out_of_range("mult_op_apply: need n < max_degree");
    Table t = generate(family, dims, max_degree);
    return apply_raising(family, dims, t.entries[n]);
}

MultiPoly deriv_op_apply(const Table& table, int n) {
    if (n < 0 || n > table.max_degree) throw std::out_of_range("deriv_op_apply: n beyond table");
    return apply_lowering(table.entries[n]);
}

MultiPoly ode_residual(const AppellFamily& family, int dims, int max_degree, int n) {
    if (n < 0 || n > max_degree - 1) throw std::out_of_range("ode_residual: need n <= max_degree-1");
    Table t = generate(family, dims, max_degree);
    const MultiPoly& p = t.entries[n];
    return apply_raising(family, dims, apply_lowering(p)) - p * Rational(n);
}

MultiPoly pde_residual(const Table& table, int j, int n) {
    if (j < 2 || j > table.dims) throw std::invalid_argument("pde_residual: need 2 <= j <= dims");
    if (n < 0 || n > table.max_degree) throw std::out_of_range("pde_residual: n beyond table");
    const MultiPoly& p = table.entries[n];
    return p.derivative_l(j) - p.derivative_l(1, j).mul_lambda(1 - j);
}

namespace {

// exp(l_j lambda^{1-j} d^j/dl_1^j) applied to p; a finite sum.
MultiPoly apply_exp_shift(const MultiPoly& p, int j) {
    MultiPoly acc = p;
    MultiPoly cur = p;
    for (int m = 1;; ++m) {
        cur = MultiPoly::var_l(p.dims(), j) * cur.derivative_l(1, j).mul_lambda(1 - j) * Rational(1, m);
        if (cur.is_zero()) break;
        acc += cur;
    }
    return acc;
}

} // namespace

Table operational_rule(const AppellFamily& family, int dims, int max_degree) {
    if (dims < 1) throw std::invalid_argument("dims must be >= 1");
    Table base = generate(family, 1, max_degree);
    Table t{family.name(), dims, max_degree, {}};
    t.entries.reserve(max_degree + 1);
    for (const MultiPoly& entry : base.entries) {
        MultiPoly q = entry.with_dims(dims);
        for (int j = 2; j <= dims; ++j) q = apply_exp_shift(q, j);
        t.entries.push_back(std::move(q));
    }
    return t;
}

std::vector<MultiPoly> classical_limit(const Table& table) {
    std::vector<MultiPoly> out;
    out.reserve(table.entries.size());
    for (const MultiPoly& p : table.entries) out.push_back(p.subst_lambda(1));
    return out;
}

Table classical_reference(const AppellFamily& family, int dims, int max_degree) {
    if (dims < 1) throw std::invalid_argument("dims must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("negative max_degree");
    std::vector<MultiPoly> arg(max_degree + 1, MultiPoly::zero(dims));
    for (int j = 1; j <= dims && j <= max_degree; ++j) arg[j] = MultiPoly::var_l(dims, j);
    Series<MultiPoly> kernel = exponential(Series<MultiPoly>::make(std::move(arg)));
    Series<MultiPoly> product = lift(family.series(max_degree), dims) * kernel;
    Table t{family.name(), dims, max_degree, {}};
    t.entries.reserve(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) t.entries.push_back(product.extract(n));
    return t;
}

} // namespace dmhap
