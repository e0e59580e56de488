#pragma once

#include <dmhap/appell.hpp>
#include <dmhap/series.hpp>

#include <string>
#include <vector>

namespace dmhap {

// Exact table of the degenerate multidimensional Hermite-based Appell
// polynomials H_n(l_1..l_r; kappa) for n = 0..max_degree, expressed over
// Q[l_1..l_r, lambda].
struct Table {
    std::string family;
    int dims = 1;       // r
    int max_degree = 0; // N
    std::vector<MultiPoly> entries;
};

// exp(lambda*(l_1 xi + l_2 xi^2 + ... + l_r xi^r)) truncated at `order`.
// dims may exceed order; the higher variables are then inert.
Series<MultiPoly> hermite_kernel(int dims, int order);

// entries[n] = n! * [xi^n] A(xi) * hermite_kernel.
Table generate(const AppellFamily& family, int dims, int max_degree);

// Lowering operator: lambda^{-1} d/dl_1.
MultiPoly apply_lowering(const MultiPoly& p);

// Raising operator: (A'/A)(lowering) + lambda*l_1
//                   + sum_{j=2..r} j*l_j*lambda^{2-j} d^{j-1}/dl_1^{j-1}.
MultiPoly apply_raising(const AppellFamily& family, int dims, const MultiPoly& p);

// Raising applied to the n-th table entry; equals entries[n+1].
MultiPoly mult_op_apply(const AppellFamily& family, int dims, int max_degree, int n);

// Lowering applied to the n-th table entry; equals n*entries[n-1].
MultiPoly deriv_op_apply(const Table& table, int n);

// Raising(Lowering(entries[n])) - n*entries[n]; zero when the table obeys
// the quasi-monomial differential equation.
MultiPoly ode_residual(const AppellFamily& family, int dims, int max_degree, int n);

// d/dl_j entries[n] - lambda^{1-j} d^j/dl_1^j entries[n]; zero on tables.
MultiPoly pde_residual(const Table& table, int j, int n);

// Rebuild the table from its one-variable base by applying
// exp(sum_{j=2..r} l_j lambda^{1-j} d^j/dl_1^j); agrees with generate().
Table operational_rule(const AppellFamily& family, int dims, int max_degree);

// lambda = 1 specialization of every entry.
std::vector<MultiPoly> classical_limit(const Table& table);

// Independent lambda-free expansion of A(xi) e^{l_1 xi + ... + l_r xi^r};
// the reference the lambda = 1 limit must match.
Table classical_reference(const AppellFamily& family, int dims, int max_degree);

} // namespace dmhap
