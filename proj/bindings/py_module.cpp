#include <dmhap/numeric.hpp>
#include <dmhap/suites.hpp>
#include <dmhap/textio.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace dmhap;

namespace {

AppellFamily make_family(const std::string& name, const std::vector<std::string>& custom) {
    if (name == "custom") {
        std::vector<Rational> numbers;
        for (const std::string& s : custom) numbers.push_back(rational_from_string(s));
        return AppellFamily::custom("custom", std::move(numbers));
    }
    if (!custom.empty()) throw std::invalid_argument("custom_numbers only apply to family 'custom'");
    return AppellFamily::by_name(name);
}

std::vector<std::string> texts(const std::vector<MultiPoly>& polys) {
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const MultiPoly& p : polys) out.push_back(to_text(p));
    return out;
}

std::vector<std::string> rationals(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Rational& q : values) out.push_back(q.str());
    return out;
}

py::dict report_dict(const IdentityReport& r) {
    py::dict d;
    d["identity_id"] = r.identity_id;
    d["family"] = r.family;
    d["r"] = r.dims;
    d["n"] = r.degree;
    d["I"] = r.scale_i;
    d["S"] = r.scale_s;
    d["pass"] = r.pass;
    d["lhs"] = to_text(r.lhs);
    d["rhs"] = to_text(r.rhs);
    d["residual_text"] = to_text(r.residual);
    d["notes"] = r.notes;
    return d;
}

py::dict suite_dict(const SuiteResult& res) {
    py::list checks;
    for (const SuiteCheck& c : res.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["promoted"] = c.promoted;
        cd["passed"] = c.passed;
        cd["detail"] = c.detail;
        checks.append(cd);
    }
    py::list reports;
    for (const IdentityReport& r : res.reports) reports.append(report_dict(r));
    py::dict d;
    d["suite"] = res.suite;
    d["family"] = res.family;
    d["r"] = res.dims;
    d["n_max"] = res.n_max;
    d["passed"] = res.promoted_pass();
    d["checks"] = checks;
    d["reports"] = reports;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tables, monomiality operators and identity checks for degenerate "
              "multidimensional Hermite-based Appell polynomials. Polynomials are exchanged "
              "as canonical text over l1..lr and the slope symbol L; rationals as 'p/q'.";

    py::register_exception<UnsupportedOperatorError>(m, "UnsupportedOperatorError",
                                                     PyExc_ValueError);

    m.def(
        "generate",
        [](const std::string& family, int r, int n_max, const std::vector<std::string>& custom) {
            return texts(generate(make_family(family, custom), r, n_max).entries);
        },
        py::arg("family"), py::arg("r"), py::arg("n_max"),
        py::arg("custom_numbers") = std::vector<std::string>{},
        "Table entries 0..n_max as canonical polynomial text.");

    m.def(
        "operational_rule",
        [](const std::string& family, int r, int n_max, const std::vector<std::string>& custom) {
            return texts(operational_rule(make_family(family, custom), r, n_max).entries);
        },
        py::arg("family"), py::arg("r"), py::arg("n_max"),
        py::arg("custom_numbers") = std::vector<std::string>{},
        "Table rebuilt from the one-variable base by exponential shift operators.");

    m.def(
        "classical_limit",
        [](const std::string& family, int r, int n_max) {
            return texts(classical_limit(generate(AppellFamily::by_name(family), r, n_max)));
        },
        py::arg("family"), py::arg("r"), py::arg("n_max"), "lambda = 1 specialization.");

    m.def(
        "classical_reference",
        [](const std::string& family, int r, int n_max) {
            return texts(classical_reference(AppellFamily::by_name(family), r, n_max).entries);
        },
        py::arg("family"), py::arg("r"), py::arg("n_max"),
        "Independent lambda-free expansion the limit must match.");

    m.def(
        "hermite_kernel_entry",
        [](int r, int n) { return to_text(hermite_kernel(r, n).extract(n)); }, py::arg("r"),
        py::arg("n"), "n! times the xi^n coefficient of the kernel exponential.");

    m.def(
        "appell_numbers",
        [](const std::string& family, int n_max) {
            return rationals(AppellFamily::by_name(family).numbers(n_max));
        },
        py::arg("family"), py::arg("n_max"));

    m.def(
        "euler_integer_numbers", [](int n_max) { return rationals(euler_integer_numbers(n_max)); },
        py::arg("n_max"));

    m.def(
        "degenerate_bernoulli", [](int n_max) { return texts(degen_bernoulli(n_max)); },
        py::arg("n_max"), "B_m(kappa) as Laurent polynomials in L, m = 0..n_max.");

    m.def(
        "power_sum", [](int n, int c) { return to_text(power_sum_sigma(n, c)); }, py::arg("n"),
        py::arg("c"), "sigma_n(c; kappa) = L^n * sum_{j<=c} j^n.");

    m.def(
        "mult_op_apply",
        [](const std::string& family, int r, int n_max, int n) {
            return to_text(mult_op_apply(AppellFamily::by_name(family), r, n_max, n));
        },
        py::arg("family"), py::arg("r"), py::arg("n_max"), py::arg("n"),
        "Raising operator applied to entry n; equals entry n+1.");

    m.def(
        "deriv_op_apply",
        [](const std::string& family, int r, int n_max, int n) {
            Table t = generate(AppellFamily::by_name(family), r, n_max);
            return to_text(deriv_op_apply(t, n));
        },
        py::arg("family"), py::arg("r"), py::arg("n_max"), py::arg("n"),
        "Lowering operator applied to entry n; equals n * entry n-1.");

    m.def(
        "eval_entry",
        [](const std::string& family, int r, int n, const std::vector<std::string>& ls,
           const std::string& kappa, int precision) {
            if (static_cast<int>(ls.size()) != r)
                throw std::invalid_argument("ls needs exactly r values");
            Table t = generate(AppellFamily::by_name(family), r, n);
            std::vector<BigFloat> point;
            for (const std::string& s : ls) point.push_back(parse_number(s));
            return format_number(eval_numeric(t.entries[n], point, parse_number(kappa)), precision);
        },
        py::arg("family"), py::arg("r"), py::arg("n"), py::arg("ls"), py::arg("kappa"),
        py::arg("precision") = 30, "High-precision value of entry n at a numeric point.");

    m.def(
        "check_identity",
        [](const std::string& identity_id, const std::string& family, int r, int n, int I, int S) {
            AppellFamily f = AppellFamily::by_name(family);
            IdentityReport rep;
            if (identity_id == "scaling_3_1" || identity_id == "hermite_scaling_3_3") {
                rep = check_scaling(f, r, n, I, S);
                rep.identity_id = identity_id;
            } else if (identity_id == "bernoulli_convolution_3_4") {
                rep = check_convolution_3_4(f, r, n, I, S);
            } else if (identity_id == "convolution_3_2") {
                rep = check_convolution_3_2(f, r, n, I, S);
            } else if (identity_id == "gf_two_route") {
                rep = gf_two_route(f, r, n, I, S);
            } else {
                throw std::invalid_argument("unknown identity_id '" + identity_id + "'");
            }
            return report_dict(rep);
        },
        py::arg("identity_id"), py::arg("family"), py::arg("r"), py::arg("n"), py::arg("I"),
        py::arg("S"));

    m.def(
        "run_suite",
        [](const std::string& suite, const std::string& family, int r, int n_max, int I, int S) {
            return suite_dict(run_suite(suite, AppellFamily::by_name(family), r, n_max, I, S));
        },
        py::arg("suite"), py::arg("family"), py::arg("r"), py::arg("n_max"), py::arg("I") = 2,
        py::arg("S") = 3);

    m.def(
        "run_all",
        [](const std::string& family, int r, int n_max, int I, int S) {
            py::list suites;
            bool passed = true;
            for (const SuiteResult& res :
                 run_all_suites(AppellFamily::by_name(family), r, n_max, I, S)) {
                passed = passed && res.promoted_pass();
                suites.append(suite_dict(res));
            }
            py::dict d;
            d["passed"] = passed;
            d["suites"] = suites;
            return d;
        },
        py::arg("family"), py::arg("r"), py::arg("n_max"), py::arg("I") = 2, py::arg("S") = 3);

    m.def(
        "to_latex",
        [](const std::string& poly_text, int r) { return to_latex(parse_poly(poly_text, r)); },
        py::arg("poly_text"), py::arg("r"), "Render canonical polynomial text as LaTeX.");

    m.def("suite_names", [] { return suite_names(); });

#ifdef DMHAP_VERSION
    m.attr("__version__") = DMHAP_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
