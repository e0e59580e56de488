#include <dmhap/suites.hpp>
#include <dmhap/textio.hpp>

#include <stdexcept>

namespace dmhap {
namespace {

void record(SuiteResult& res, const std::string& name, bool promoted, bool ok,
            const std::string& detail = "") {
    res.checks.push_back({name, promoted, ok, ok ? "" : detail});
}

SuiteResult base_result(const std::string& suite, const AppellFamily& f, int dims, int n_max,
                        int scale_i, int scale_s) {
    if (dims < 1) throw std::invalid_argument("r must be >= 1");
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    return SuiteResult{suite, f.name(), dims, n_max, scale_i, scale_s, {}, {}};
}

void run_monomiality(SuiteResult& res, const AppellFamily& f, int dims, int n_max) {
    if (!f.supports_operators())
        throw UnsupportedOperatorError("operators unsupported for A(0)=0 (family '" + f.name() +
                                       "')");
    Table t = generate(f, dims, n_max + 1);
    bool raise_ok = true, lower_ok = true, comm_ok = true, eigen_ok = true;
    std::string raise_d, lower_d, comm_d, eigen_d;
    for (int n = 0; n <= n_max; ++n) {
        const MultiPoly& p = t.entries[n];
        MultiPoly raised = apply_raising(f, dims, p);
        if (raise_ok && !(raised == t.entries[n + 1])) {
            raise_ok = false;
            raise_d = "n=" + std::to_string(n);
        }
        MultiPoly lowered = apply_lowering(p);
        MultiPoly expect =
            n == 0 ? MultiPoly::zero(dims) : t.entries[n - 1] * Rational(n);
        if (lower_ok && !(lowered == expect)) {
            lower_ok = false;
            lower_d = "n=" + std::to_string(n);
        }
        MultiPoly commutator = apply_lowering(raised) - apply_raising(f, dims, lowered);
        if (comm_ok && !(commutator == p)) {
            comm_ok = false;
            comm_d = "n=" + std::to_string(n);
        }
        if (eigen_ok && !(apply_raising(f, dims, lowered) == p * Rational(n))) {
            eigen_ok = false;
            eigen_d = "n=" + std::to_string(n);
        }
    }
    record(res, "raising", true, raise_ok, raise_d);
    record(res, "lowering", true, lower_ok, lower_d);
    record(res, "commutator_identity", true, comm_ok, comm_d);
    record(res, "eigenvalue_equation", true, eigen_ok, eigen_d);
}

void run_derivatives(SuiteResult& res, const AppellFamily& f, int dims, int n_max) {
    Table t = generate(f, dims, n_max);
    bool l1_ok = true, lj_ok = true;
    std::string l1_d, lj_d;
    for (int n = 0; n <= n_max; ++n) {
        const MultiPoly& p = t.entries[n];
        for (int k = 1; k <= dims + 1; ++k) {
            MultiPoly expect = k > n ? MultiPoly::zero(dims)
                                     : t.entries[n - k].mul_lambda(k) *
                                           Rational(falling_factorial(n, k));
            if (!(p.derivative_l(1, k) == expect)) {
                l1_ok = false;
                l1_d = "n=" + std::to_string(n) + ", k=" + std::to_string(k);
            }
        }
        for (int j = 2; j <= dims; ++j) {
            MultiPoly expect = j > n ? MultiPoly::zero(dims)
                                     : t.entries[n - j].mul_lambda(1) *
                                           Rational(falling_factorial(n, j));
            if (!(p.derivative_l(j) == expect)) {
                lj_ok = false;
                lj_d = "n=" + std::to_string(n) + ", j=" + std::to_string(j);
            }
        }
    }
    record(res, "dl1_powers", true, l1_ok, l1_d);
    record(res, "dlj_single", true, lj_ok, lj_d);
}

void run_pde(SuiteResult& res, const AppellFamily& f, int dims, int n_max) {
    Table t = generate(f, dims, n_max);
    bool ok = true;
    std::string d;
    for (int j = 2; j <= dims; ++j) {
        for (int n = 0; n <= n_max; ++n) {
            if (!pde_residual(t, j, n).is_zero()) {
                ok = false;
                d = "j=" + std::to_string(j) + ", n=" + std::to_string(n);
            }
        }
    }
    record(res, "pde_system", true, ok, d);
}

void run_oprule(SuiteResult& res, const AppellFamily& f, int dims, int n_max) {
    Table gen = generate(f, dims, n_max);
    Table op = operational_rule(f, dims, n_max);
    bool ok = true;
    std::string d;
    for (int n = 0; n <= n_max; ++n) {
        if (!(gen.entries[n] == op.entries[n])) {
            ok = false;
            d = "n=" + std::to_string(n);
            break;
        }
    }
    record(res, "operational_rule_matches_generate", true, ok, d);
}

void run_limit(SuiteResult& res, const AppellFamily& f, int dims, int n_max) {
    Table t = generate(f, dims, n_max);
    std::vector<MultiPoly> lim = classical_limit(t);
    Table ref = classical_reference(f, dims, n_max);
    bool ok = true;
    std::string d;
    for (int n = 0; n <= n_max; ++n) {
        if (!(lim[n] == ref.entries[n])) {
            ok = false;
            d = "n=" + std::to_string(n);
            break;
        }
    }
    record(res, "classical_limit_matches_reference", true, ok, d);
}

void run_scaling(SuiteResult& res, const AppellFamily& f, int dims, int n_max, int I, int S) {
    bool promoted = f.name() == "identity";
    bool ok = true;
    std::string d;
    for (int n = 0; n <= n_max; ++n) {
        IdentityReport r = check_scaling(f, dims, n, I, S);
        if (!r.pass && ok) {
            ok = false;
            d = "n=" + std::to_string(n) + ", residual " + to_text(r.residual);
        }
        res.reports.push_back(std::move(r));
    }
    record(res, "scaling_residuals_zero", promoted, ok, d);
}

void run_convolution_3_4(SuiteResult& res, const AppellFamily& f, int dims, int n_max, int I,
                         int S) {
    bool promoted = f.name() == "identity";
    bool ok = true;
    std::string d;
    for (int n = 0; n <= n_max; ++n) {
        IdentityReport r = check_convolution_3_4(f, dims, n, I, S);
        if (!r.pass && ok) {
            ok = false;
            d = "n=" + std::to_string(n);
        }
        res.reports.push_back(std::move(r));
    }
    record(res, "bernoulli_convolution_residuals_zero", promoted, ok, d);
}

void run_convolution_3_2(SuiteResult& res, const AppellFamily& f, int dims, int n_max, int I,
                         int S) {
    // Reported only: the P symbol has no canonical reading, so no family is
    // promoted here.
    for (int n = 0; n <= n_max; ++n)
        res.reports.push_back(check_convolution_3_2(f, dims, n, I, S));
    record(res, "convolution_3_2_reported", false, true);
}

void run_gf_two_route(SuiteResult& res, const AppellFamily& f, int dims, int n_max, int I, int S) {
    bool promoted = f.name() == "identity";
    IdentityReport r = gf_two_route(f, dims, n_max, I, S);
    bool ok = r.pass;
    std::string d = ok ? "" : "first mismatch at n=" + std::to_string(r.degree);
    res.reports.push_back(std::move(r));
    record(res, "gf_two_route_agree", promoted, ok, d);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "monomiality",     "derivatives", "pde",          "oprule",      "limit",
        "scaling",         "convolution_3_4", "convolution_3_2", "gf_two_route"};
    return names;
}

SuiteResult run_suite(const std::string& suite, const AppellFamily& family, int dims, int n_max,
                      int scale_i, int scale_s) {
    SuiteResult res = base_result(suite, family, dims, n_max, scale_i, scale_s);
    if (suite == "monomiality") {
        run_monomiality(res, family, dims, n_max);
    } else if (suite == "derivatives") {
        run_derivatives(res, family, dims, n_max);
    } else if (suite == "pde") {
        run_pde(res, family, dims, n_max);
    } else if (suite == "oprule") {
        run_oprule(res, family, dims, n_max);
    } else if (suite == "limit") {
        run_limit(res, family, dims, n_max);
    } else if (suite == "scaling" || suite == "scaling_3_1" || suite == "hermite_scaling_3_3") {
        run_scaling(res, family, dims, n_max, scale_i, scale_s);
        // the kappa-suppressed restatement is the same computation under a
        // different label
        if (suite == "hermite_scaling_3_3")
            for (IdentityReport& r : res.reports) r.identity_id = "hermite_scaling_3_3";
    } else if (suite == "convolution_3_4" || suite == "bernoulli_convolution_3_4") {
        run_convolution_3_4(res, family, dims, n_max, scale_i, scale_s);
    } else if (suite == "convolution_3_2") {
        run_convolution_3_2(res, family, dims, n_max, scale_i, scale_s);
    } else if (suite == "gf_two_route") {
        run_gf_two_route(res, family, dims, n_max, scale_i, scale_s);
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    return res;
}

std::vector<SuiteResult> run_all_suites(const AppellFamily& family, int dims, int n_max,
                                        int scale_i, int scale_s) {
    std::vector<SuiteResult> out;
    for (const std::string& name : suite_names()) {
        try {
            out.push_back(run_suite(name, family, dims, n_max, scale_i, scale_s));
        } catch (const UnsupportedOperatorError& e) {
            SuiteResult res = base_result(name, family, dims, n_max, scale_i, scale_s);
            record(res, "skipped", false, true, "");
            res.checks.back().detail = e.what();
            out.push_back(std::move(res));
        }
    }
    return out;
}

} // namespace dmhap
