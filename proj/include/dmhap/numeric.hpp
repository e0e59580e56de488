#pragma once

#include <dmhap/multipoly.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <string>
#include <vector>

namespace dmhap {

// Working precision: 150 decimal digits, comfortably above the largest
// output precision the CLI accepts (100 digits).
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<150>>;

inline constexpr int kMinPrecision = 10;
inline constexpr int kMaxPrecision = 100;

// lambda = log(1+kappa)/kappa, continued by 1 at kappa = 0; kappa <= -1 is
// out of domain.
BigFloat lambda_of_kappa(const BigFloat& kappa);

BigFloat eval_numeric(const MultiPoly& p, const std::vector<BigFloat>& ls, const BigFloat& kappa);

// Accepts "p/q" rationals and decimal literals.
BigFloat parse_number(const std::string& text);

std::string format_number(const BigFloat& value, int digits);

} // namespace dmhap
