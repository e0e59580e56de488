#include <dmhap/numeric.hpp>

#include <stdexcept>

namespace dmhap {

BigFloat lambda_of_kappa(const BigFloat& kappa) {
    if (kappa <= -1) throw std::domain_error("kappa must be > -1");
    if (kappa == 0) return 1;
    return log(BigFloat(1) + kappa) / kappa;
}

namespace {

BigFloat pow_signed(const BigFloat& base, int e) {
    if (e == 0) return 1;
    if (e < 0) return BigFloat(1) / pow_signed(base, -e);
    BigFloat p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
}

} // namespace

BigFloat eval_numeric(const MultiPoly& p, const std::vector<BigFloat>& ls, const BigFloat& kappa) {
    if (static_cast<int>(ls.size()) != p.dims())
        throw std::invalid_argument("eval_numeric: point length != dims");
    BigFloat lambda = lambda_of_kappa(kappa);
    BigFloat sum = 0;
    for (const auto& [m, c] : p.terms()) {
        BigFloat t = c.convert_to<BigFloat>() * pow_signed(lambda, m.lambda_exp);
        for (size_t i = 0; i < ls.size(); ++i) t *= pow_signed(ls[i], m.l_exp[i]);
        sum += t;
    }
    return sum;
}

BigFloat parse_number(const std::string& text) {
    try {
        if (text.find('/') != std::string::npos)
            return rational_from_string(text).convert_to<BigFloat>();
        return BigFloat(text);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
}

std::string format_number(const BigFloat& value, int digits) {
    if (digits < kMinPrecision || digits > kMaxPrecision)
        throw std::invalid_argument("precision out of range");
    return value.str(digits);
}

} // namespace dmhap
