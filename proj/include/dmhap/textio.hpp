#pragma once

#include <dmhap/identities.hpp>
#include <dmhap/table.hpp>

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace dmhap {

// Canonical machine rendering: terms sorted by descending (total l-degree,
// exponent vector, lambda exponent); lambda prints as "L", rationals as
// "p/q". Example: "L^2*l1^2 + 2*L*l2".
std::string to_text(const MultiPoly& p);

// Same term order with "\lambda" and subscripted variables.
std::string to_latex(const MultiPoly& p);

// Inverse of to_text for polynomials over l_1..l_dims.
MultiPoly parse_poly(const std::string& text, int dims);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

nlohmann::json table_document(const Table& table);
std::string table_csv(const Table& table);
std::string table_latex(const Table& table);
std::string table_text(const Table& table);

nlohmann::json report_document(const IdentityReport& report);

} // namespace dmhap
