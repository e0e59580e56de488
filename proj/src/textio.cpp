#include <dmhap/textio.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace dmhap {
namespace {

// Display order: high total l-degree first, then exponent vector, then
// lambda exponent, all descending.
bool display_before(const Monomial& a, const Monomial& b) {
    int da = a.total_l_degree(), db = b.total_l_degree();
    if (da != db) return da > db;
    if (a.l_exp != b.l_exp) return a.l_exp > b.l_exp;
    return a.lambda_exp > b.lambda_exp;
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const MultiPoly& p) {
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
    return terms;
}

std::string rational_latex(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return "\\frac{" + numerator(q).str() + "}{" + denominator(q).str() + "}";
}

} // namespace

std::string to_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : sorted_terms(p)) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::vector<std::string> parts;
        if (mag != 1) parts.push_back(mag.str());
        if (m.lambda_exp != 0) {
            std::string f = "L";
            if (m.lambda_exp != 1) f += "^" + std::to_string(m.lambda_exp);
            parts.push_back(std::move(f));
        }
        for (size_t j = 0; j < m.l_exp.size(); ++j) {
            if (m.l_exp[j] == 0) continue;
            std::string f = "l" + std::to_string(j + 1);
            if (m.l_exp[j] != 1) f += "^" + std::to_string(m.l_exp[j]);
            parts.push_back(std::move(f));
        }
        if (parts.empty()) parts.push_back(mag.str());
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
    }
    return out;
}

std::string to_latex(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : sorted_terms(p)) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::vector<std::string> parts;
        bool bare = m.lambda_exp == 0 && m.total_l_degree() == 0;
        if (mag != 1 || bare) parts.push_back(rational_latex(mag));
        if (m.lambda_exp != 0) {
            std::string f = "\\lambda";
            if (m.lambda_exp != 1) f += "^{" + std::to_string(m.lambda_exp) + "}";
            parts.push_back(std::move(f));
        }
        for (size_t j = 0; j < m.l_exp.size(); ++j) {
            if (m.l_exp[j] == 0) continue;
            std::string f = "l_{" + std::to_string(j + 1) + "}";
            if (m.l_exp[j] != 1) f += "^{" + std::to_string(m.l_exp[j]) + "}";
            parts.push_back(std::move(f));
        }
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += " ";
            out += parts[i];
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int dims;

    explicit Parser(const std::string& text, int r) : s(text), dims(r) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() { return s[pos]; }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("digit expected");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    Rational rational() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (pos == start) fail("number expected");
        return rational_from_string(s.substr(start, pos - start));
    }

    // One product of factors: [rational] {L[^k]} {lj[^e]}.
    MultiPoly term() {
        Rational coeff = 1;
        std::vector<int> l_exp(dims, 0);
        int lambda_exp = 0;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c == 'L') {
                ++pos;
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = static_cast<int>(integer());
                }
                lambda_exp += e;
            } else if (c == 'l') {
                ++pos;
                long j = integer();
                if (j < 1 || j > dims) fail("variable l" + std::to_string(j) + " out of range");
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = static_cast<int>(integer());
                }
                if (e < 0) fail("negative l exponent");
                l_exp[j - 1] += e;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= rational();
            } else {
                if (!any) fail("term expected");
                break;
            }
            any = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) fail("term expected");
        return MultiPoly::monomial(dims, coeff, std::move(l_exp), lambda_exp);
    }

    MultiPoly poly() {
        MultiPoly p = MultiPoly::zero(dims);
        skip_ws();
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        p += neg ? -term() : term();
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-') fail("operator expected");
            ++pos;
            MultiPoly t = term();
            p += c == '-' ? -t : t;
        }
        return p;
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, int dims) {
    Parser parser(text, dims);
    parser.skip_ws();
    if (parser.eof()) throw std::invalid_argument("empty polynomial text");
    if (text.find_first_not_of("0 \t") == std::string::npos) return MultiPoly::zero(dims);
    return parser.poly();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << to_text(p);
}

nlohmann::json table_document(const Table& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (int n = 0; n <= table.max_degree; ++n)
        entries.push_back({{"n", n}, {"poly", to_text(table.entries[n])}});
    return {{"schema_version", 1},
            {"family", table.family},
            {"r", table.dims},
            {"N", table.max_degree},
            {"lambda_symbol", "L"},
            {"entries", entries}};
}

std::string table_csv(const Table& table) {
    std::ostringstream os;
    os << "n,polynomial_text\n";
    for (int n = 0; n <= table.max_degree; ++n)
        os << n << "," << to_text(table.entries[n]) << "\n";
    return os.str();
}

std::string table_latex(const Table& table) {
    std::ostringstream os;
    os << "% family: " << table.family << ", r = " << table.dims << "\n";
    os << "\\begin{align*}\n";
    for (int n = 0; n <= table.max_degree; ++n)
        os << "  P_{" << n << "} &= " << to_latex(table.entries[n]) << " \\\\\n";
    os << "\\end{align*}\n";
    return os.str();
}

std::string table_text(const Table& table) {
    std::ostringstream os;
    os << "family " << table.family << ", r = " << table.dims << ", N = " << table.max_degree
       << "\n";
    for (int n = 0; n <= table.max_degree; ++n)
        os << "H[" << n << "] = " << to_text(table.entries[n]) << "\n";
    return os.str();
}

nlohmann::json report_document(const IdentityReport& report) {
    return {{"identity_id", report.identity_id},
            {"family", report.family},
            {"r", report.dims},
            {"n", report.degree},
            {"I", report.scale_i},
            {"S", report.scale_s},
            {"pass", report.pass},
            {"residual_text", to_text(report.residual)},
            {"notes", report.notes}};
}

} // namespace dmhap
