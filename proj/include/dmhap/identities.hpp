#pragma once

#include <dmhap/table.hpp>

#include <string>
#include <vector>

namespace dmhap {

// Outcome of one exact identity check. pass is true iff residual is the
// zero polynomial; checkers report, they do not assert.
struct IdentityReport {
    std::string identity_id;
    std::string family;
    int dims = 1;
    int degree = 0;  // n (for series checks: first mismatching index, or N)
    int scale_i = 1; // I
    int scale_s = 1; // S
    MultiPoly lhs;
    MultiPoly rhs;
    MultiPoly residual;
    bool pass = false;
    std::string notes;
};

// Degenerate Bernoulli values B_m(kappa) for m = 0..max_index, as Laurent
// polynomials in lambda: the series inverse of ((1+kappa)^{t/kappa}-1)/t.
// Closed form: B_m(kappa) = B_m * lambda^{m-1} with B_m the classical
// Bernoulli numbers (so B_0(kappa) = lambda^{-1}).
std::vector<MultiPoly> degen_bernoulli(int max_index);

// The generating series of the values above (coefficients B_m(kappa)/m!).
Series<MultiPoly> degen_bernoulli_series(int order);

// sigma_n(c; kappa) = lambda^n * sum_{j=0..c} j^n, with 0^0 = 1.
MultiPoly power_sum_sigma(int n, int c);

// Series with coefficients sigma_p(c; kappa)/p!; equals the quotient
// (e^{lambda(c+1)t}-1)/(e^{lambda t}-1) truncated at `order`.
Series<MultiPoly> power_sum_series(int c, int order);

// I^n H_n(S l_1, S^2 l_2, ...) vs S^n H_n(I l_1, I^2 l_2, ...).
IdentityReport check_scaling(const AppellFamily& family, int dims, int n, int scale_i, int scale_s);

// Triple-sum convolution with degenerate Bernoulli and power-sum factors,
// against its I <-> S mirror.
IdentityReport check_convolution_3_4(const AppellFamily& family, int dims, int n, int scale_i,
                                     int scale_s);

// Same shape without the Bernoulli factor; the P_{n-k} symbol is resolved
// by `p_interpretation` ("sigma" is the only built-in reading).
IdentityReport check_convolution_3_2(const AppellFamily& family, int dims, int n, int scale_i,
                                     int scale_s, const std::string& p_interpretation = "sigma");

// Compares the two series factorizations of the combined generating
// function, coefficient by coefficient up to max_degree.
IdentityReport gf_two_route(const AppellFamily& family, int dims, int max_degree, int scale_i,
                            int scale_s);

} // namespace dmhap
