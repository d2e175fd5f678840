#include "harmonic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "harmonic/detail/finite_diff.hpp"
#include "harmonic/format.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/specfun.hpp"
#include "harmonic/termsum.hpp"

namespace harmonic::verify {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

using specfun::gamma;
using specfun::hyp2f1;

// compact deterministic parameter rendering: shortest %g form, imaginary part
// only when present
std::string param_str(Complex v) {
    char buf[64];
    if (v.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", v.real());
        return buf;
    }
    char re[40], im[40];
    std::snprintf(re, sizeof(re), "%.17g", v.real());
    std::snprintf(im, sizeof(im), "%.17g", std::abs(v.imag()));
    return std::string(re) + (std::signbit(v.imag()) ? "-" : "+") + im + "i";
}

std::string param_str(double v) { return param_str(Complex(v, 0.0)); }

void finalize(IdentityReport& rep, double tol) {
    rep.tolerance = tol;
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    rep.rel_err = rep.abs_err / std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-300});
    double err = (std::abs(rep.lhs) < 1e-12) ? rep.abs_err : rep.rel_err;
    rep.status = (err <= tol) ? Status::pass : Status::fail;
}

IdentityReport skipped(IdentityReport rep, double tol, const std::string& reason) {
    rep.tolerance = tol;
    rep.status = Status::skipped;
    rep.parameters["skip_reason"] = reason;
    return rep;
}

double quad_tol(double tol) { return std::clamp(tol / 10.0, 1e-13, 1e-7); }

bool near_nonpos_int(Complex z) {
    return std::abs(z.imag()) <= 1e-12 && z.real() < 0.5 &&
           std::abs(z.real() - std::round(z.real())) <= 1e-12;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
    }
}

IdentityReport check_lemma31(Complex a, Complex b, Complex c, Complex mu, double x, double tol) {
    IdentityReport rep;
    rep.identity_name = "lemma31";
    rep.parameters = {{"a", param_str(a)}, {"b", param_str(b)}, {"c", param_str(c)},
                      {"mu", param_str(mu)}, {"x", param_str(x)}};
    if (!(x > 1.0)) return skipped(rep, tol, "precondition: requires x > 1");
    if (!(mu.real() > 0.0)) return skipped(rep, tol, "precondition: requires Re mu > 0");
    if (!(b.real() > 0.0)) return skipped(rep, tol, "precondition: requires Re b > 0");
    if (near_nonpos_int(c)) return skipped(rep, tol, "precondition: c at a pole");
    try {
        rep.lhs = std::pow(Complex(x), -b) * hyp2f1(a, b, c, 1.0 / x);
        quadrature::Integrand f{
            [&](double y, double offset) {
                return std::pow(Complex(offset), mu - 1.0) * std::pow(Complex(y), -b - mu) *
                       hyp2f1(a, b + mu, c, 1.0 / y);
            },
            x, mu.real() - 1.0};
        auto quad = quadrature::integrate_semi_infinite(f, quad_tol(tol));
        if (!quad.converged) return skipped(rep, tol, "quadrature did not converge");
        rep.quad_error = quad.error_estimate;
        rep.rhs = gamma(b + mu) / (gamma(b) * gamma(mu)) * quad.value;
    } catch (const std::exception& e) {
        return skipped(rep, tol, e.what());
    }
    finalize(rep, tol);
    return rep;
}

IdentityReport check_lemma32(Complex a, Complex b, Complex c, Complex nu, double x, double tol) {
    IdentityReport rep;
    rep.identity_name = "lemma32";
    rep.parameters = {{"a", param_str(a)}, {"b", param_str(b)}, {"c", param_str(c)},
                      {"nu", param_str(nu)}, {"x", param_str(x)}};
    if (!(x > 1.0)) return skipped(rep, tol, "precondition: requires x > 1");
    if (!(nu.real() > 0.0)) return skipped(rep, tol, "precondition: requires Re nu > 0");
    if (!(c.real() > nu.real())) return skipped(rep, tol, "precondition: requires Re c > Re nu");
    if (near_nonpos_int(c) || near_nonpos_int(c - nu)) return skipped(rep, tol, "precondition: c at a pole");
    try {
        Complex f21 = hyp2f1(a, b, c, 1.0 / x);
        rep.lhs = std::pow(Complex(x), nu - c) * f21;
        quadrature::Integrand f{
            [&](double y, double offset) {
                return std::pow(Complex(offset), nu - 1.0) * std::pow(Complex(y), -c) *
                       hyp2f1(a, b, c - nu, 1.0 / y);
            },
            x, nu.real() - 1.0};
        auto quad = quadrature::integrate_semi_infinite(f, quad_tol(tol));
        if (!quad.converged) return skipped(rep, tol, "quadrature did not converge");
        rep.quad_error = quad.error_estimate;
        rep.rhs = gamma(c) / (gamma(c - nu) * gamma(nu)) * quad.value;
        // the exponent as printed, recorded for the report
        Complex printed = std::pow(Complex(x), c - nu) * f21;
        double printed_err = std::abs(printed - rep.rhs) / std::abs(rep.rhs);
        rep.parameters["printed_exponent_rel_err"] = param_str(printed_err);
    } catch (const std::exception& e) {
        return skipped(rep, tol, e.what());
    }
    finalize(rep, tol);
    return rep;
}

IdentityReport check_key_lemma(Complex a, Complex b, Complex c, Complex mu, Complex nu, double x,
                               double tol, KeyLemmaVariant variant) {
    IdentityReport rep;
    rep.identity_name = "key-lemma";
    bool tilde = variant == KeyLemmaVariant::tilde;
    rep.parameters = {{"a", param_str(a)},   {"b", param_str(b)}, {"c", param_str(c)},
                      {"mu", param_str(mu)}, {"nu", param_str(nu)}, {"x", param_str(x)},
                      {"variant", tilde ? "tilde" : "plain"}};
    bool nu_zero = nu == Complex{};
    if (!(x > 1.0)) return skipped(rep, tol, "precondition: requires x > 1");
    if (!(a.real() > 0.0 && b.real() > 0.0 && mu.real() > 0.0))
        return skipped(rep, tol, "precondition: requires Re a, Re b, Re mu > 0");
    if (!nu_zero && !(nu.real() > 0.0))
        return skipped(rep, tol, "precondition: requires Re nu > 0 (nu = 0 handles the degenerate case)");
    if (near_nonpos_int(c)) return skipped(rep, tol, "precondition: c at a pole");
    try {
        rep.lhs = (tilde ? std::pow(Complex(x), nu - a) : std::pow(Complex(x), mu - b)) *
                  hyp2f1(a, b, c, 1.0 / x);
        // nu = 0: Gamma(b+nu)/Gamma(b) = 1 and the kernel collapses to a pure
        // power, which is exactly the lemma31 shape applied in the other slot.
        Complex pref = gamma(a + mu) * gamma(b + nu) / (gamma(a) * gamma(b) * gamma(mu + nu));
        Complex kernel_a = tilde ? nu : mu;
        Complex kernel_b = tilde ? (b - a + nu) : (a - b + mu);
        Complex weight_exp = tilde ? (-a - mu) : (-b - nu);
        quadrature::Integrand f{
            [&](double y, double offset) {
                double w = -offset / x;  // 1 - y/x, exact near the endpoint
                Complex K = hyp2f1(kernel_a, kernel_b, mu + nu, w);
                return std::pow(Complex(offset), mu + nu - 1.0) * K *
                       std::pow(Complex(y), weight_exp) * hyp2f1(a + mu, b + nu, c, 1.0 / y);
            },
            x, (mu + nu).real() - 1.0};
        auto quad = quadrature::integrate_semi_infinite(f, quad_tol(tol));
        if (!quad.converged) return skipped(rep, tol, "quadrature did not converge");
        rep.quad_error = quad.error_estimate;
        rep.rhs = pref * quad.value;
        if (tilde) {
            // pointwise kernel relation Wtilde = (y/x)^{(a+mu)-(b+nu)} W
            double worst = 0.0;
            for (double y : {x + 0.3, x + 1.0, 2.0 * x, 5.0 * x}) {
                double w = 1.0 - y / x;
                Complex W = hyp2f1(mu, a - b + mu, mu + nu, w);
                Complex Wt = hyp2f1(nu, b - a + nu, mu + nu, w);
                Complex rel = std::pow(Complex(y / x), (a + mu) - (b + nu)) * W;
                worst = std::max(worst, std::abs(Wt - rel) / std::max(std::abs(rel), 1e-300));
            }
            rep.parameters["kernel_relation_max_err"] = param_str(worst);
        }
    } catch (const std::exception& e) {
        return skipped(rep, tol, e.what());
    }
    finalize(rep, tol);
    return rep;
}

IdentityReport check_quadratic_transform(int n, kernels::SpectralParam lambda, double r,
                                         double tol) {
    IdentityReport rep;
    rep.identity_name = "quadratic-transform";
    rep.parameters = {{"n", std::to_string(n)}, {"lambda", param_str(lambda.value())},
                      {"r", param_str(r)}};
    try {
        rep.lhs = kernels::hyperbolic_resolvent_half(n, lambda, r);
        rep.rhs = kernels::hyperbolic_resolvent(n, lambda, r);
        rep.parameters["ratio"] = param_str(rep.lhs / rep.rhs);
    } catch (const std::exception& e) {
        return skipped(rep, tol, e.what());
    }
    finalize(rep, tol);
    return rep;
}

IdentityReport check_recurrence(int n, kernels::SpectralParam lambda, double r, double tol) {
    IdentityReport rep;
    rep.identity_name = "recurrence";
    rep.parameters = {{"n", std::to_string(n)}, {"lambda", param_str(lambda.value())},
                      {"r", param_str(r)}};
    try {
        Complex lam = lambda.value();
        if (n >= 1 && n % 2 == 1) {
            // exact symbolic derivative of the elementary closed form
            int m = (n - 1) / 2;
            const auto& tm = closedform::iterated_terms(m);
            closedform::TermSum dt = closedform::differentiate(tm);
            Complex dr = closedform::odd_constant(m, lam) * closedform::eval_term_sum(dt, lam, r);
            rep.lhs = -dr / (2.0 * kPi * std::sinh(r));
            rep.rhs = closedform::odd_resolvent(m + 1, lam, r);
            rep.parameters["path"] = "symbolic";
        } else {
            double h = std::max(1e-4, 1e-3 * r);
            auto f = [&](double rr) { return kernels::hyperbolic_resolvent(n, lambda, rr); };
            Complex dr = detail::richardson_derivative1(f, r, h);
            rep.lhs = -dr / (2.0 * kPi * std::sinh(r));
            rep.rhs = kernels::hyperbolic_resolvent(n + 2, lambda, r);
            rep.parameters["path"] = "fd";
        }
    } catch (const std::exception& e) {
        return skipped(rep, tol, e.what());
    }
    finalize(rep, tol);
    return rep;
}

IdentityReport check_transform(const kernels::SpaceDescriptor& X, kernels::SpectralParam lambda,
                               double r, double tol) {
    IdentityReport rep;
    rep.identity_name = "transform";
    rep.parameters = {{"dim-n", std::to_string(X.dim_n())}, {"dim-z", std::to_string(X.dim_z())},
                      {"lambda", param_str(lambda.value())}, {"r", param_str(r)}};
    if (!X.transform_eligible()) return skipped(rep, tol, "precondition: descriptor not transform-eligible");
    try {
        rep.lhs = kernels::na_resolvent(X, lambda, r);
        auto quad = quadrature::integrate_transform(X, lambda, r, quad_tol(tol / 2.0));
        if (!quad.converged) return skipped(rep, tol, "quadrature did not converge");
        rep.quad_error = quad.error_estimate;
        rep.rhs = quad.value;
        rep.parameters["ratio"] = param_str(rep.lhs / rep.rhs);
    } catch (const std::exception& e) {
        return skipped(rep, tol, e.what());
    }
    finalize(rep, tol);
    return rep;
}

IdentityReport check_bundle_transform(const kernels::SpaceDescriptor& X, kernels::BundleParam tau,
                                      kernels::SpectralParam lambda, double r, double tol,
                                      kernels::BundleConstant variant) {
    IdentityReport rep;
    rep.identity_name = "bundle-transform";
    rep.parameters = {{"dim-n", std::to_string(X.dim_n())}, {"dim-z", std::to_string(X.dim_z())},
                      {"tau", param_str(tau.value())}, {"lambda", param_str(lambda.value())},
                      {"r", param_str(r)},
                      {"constant", variant == kernels::BundleConstant::printed ? "printed"
                                                                               : "gamma-matched"}};
    if (tau.value() == 0.0) return skipped(rep, tol, "precondition: tau = 0 is the nu = 0 degenerate case");
    try {
        rep.lhs = kernels::bundle_resolvent(X, tau, lambda, r, variant);
        auto quad =
            quadrature::integrate_bundle_transform(X, tau.value(), lambda, r, quad_tol(tol / 2.0));
        if (!quad.converged) return skipped(rep, tol, "quadrature did not converge");
        rep.quad_error = quad.error_estimate;
        rep.rhs = quad.value;
        rep.parameters["ratio"] = param_str(rep.lhs / rep.rhs);
    } catch (const std::exception& e) {
        return skipped(rep, tol, e.what());
    }
    finalize(rep, tol);
    return rep;
}

namespace {

const std::vector<Complex>& lambda_grid() {
    static const std::vector<Complex> grid = {
        {1.0, 0.0}, {1.5, 0.0}, {2.0, 0.5}, {0.3, 1.0}, {0.0, 3.0}};
    return grid;
}

CheckRequest make_request(std::string identity, std::map<std::string, std::string> params,
                          double tol) {
    return CheckRequest{std::move(identity), std::move(params), tol};
}

void add_section3_batteries(SuiteConfig& cfg) {
    // lemma31: closed-form instances (integrals collapse to elementary ones)
    cfg.checks.push_back(make_request(
        "lemma31", {{"a", "1"}, {"b", "1"}, {"c", "2"}, {"mu", "1"}, {"x", "2"}}, 1e-9));
    cfg.checks.push_back(make_request(
        "lemma31", {{"a", "2"}, {"b", "1"}, {"c", "2"}, {"mu", "1"}, {"x", "2"}}, 1e-9));
    cfg.checks.push_back(make_request(
        "lemma31", {{"a", "1"}, {"b", "1"}, {"c", "2"}, {"mu", "0.5"}, {"x", "3"}}, 1e-7));
    for (const char* a : {"0.7", "1.3"})
        for (const char* b : {"0.6", "1.1"})
            for (const char* c : {"1.8", "2.4"})
                for (const char* mu : {"0.4", "1.0"})
                    cfg.checks.push_back(make_request(
                        "lemma31", {{"a", a}, {"b", b}, {"c", c}, {"mu", mu}, {"x", "2.5"}}, 1e-6));
    cfg.checks.push_back(make_request(
        "lemma31", {{"a", "1.3"}, {"b", "0.9"}, {"c", "2.1"}, {"mu", "0.5"}, {"x", "1.5"}}, 1e-6));
    cfg.checks.push_back(make_request(
        "lemma31", {{"a", "1.3"}, {"b", "0.9"}, {"c", "2.1"}, {"mu", "0.5"}, {"x", "5"}}, 1e-6));
    cfg.checks.push_back(make_request(
        "lemma31", {{"a", "1+0.4i"}, {"b", "0.8"}, {"c", "2+0.3i"}, {"mu", "0.6"}, {"x", "2"}},
        1e-6));

    // lemma32: corrected exponent; the printed one is recorded per report
    cfg.checks.push_back(make_request(
        "lemma32", {{"a", "1"}, {"b", "1"}, {"c", "2"}, {"nu", "1"}, {"x", "2"}}, 1e-9));
    cfg.checks.push_back(make_request(
        "lemma32", {{"a", "1"}, {"b", "2"}, {"c", "3"}, {"nu", "1"}, {"x", "2"}}, 1e-7));
    for (const char* a : {"0.7", "1.2"})
        for (const char* b : {"0.9", "1.4"})
            for (const char* c : {"2.2", "3.1"})
                for (const char* nu : {"0.6", "1.0"})
                    cfg.checks.push_back(make_request(
                        "lemma32", {{"a", a}, {"b", b}, {"c", c}, {"nu", nu}, {"x", "2.5"}}, 1e-6));

    // key lemma, both variants
    for (const char* variant : {"plain", "tilde"}) {
        cfg.checks.push_back(make_request("key-lemma",
                                          {{"a", "1.5"}, {"b", "1"}, {"c", "2"}, {"mu", "0.5"},
                                           {"nu", "0.5"}, {"x", "2"}, {"variant", variant}},
                                          1e-9));
        cfg.checks.push_back(make_request("key-lemma",
                                          {{"a", "1"}, {"b", "1"}, {"c", "2"}, {"mu", "0.5"},
                                           {"nu", "0.5"}, {"x", "3"}, {"variant", variant}},
                                          1e-6));
        cfg.checks.push_back(make_request("key-lemma",
                                          {{"a", "1.2"}, {"b", "0.8"}, {"c", "2.1"}, {"mu", "0.6"},
                                           {"nu", "0"}, {"x", "2"}, {"variant", variant}},
                                          1e-6));
        cfg.checks.push_back(make_request("key-lemma",
                                          {{"a", "0.9"}, {"b", "1.1"}, {"c", "1.7"}, {"mu", "0.5"},
                                           {"nu", "0"}, {"x", "2.5"}, {"variant", variant}},
                                          1e-6));
        cfg.checks.push_back(make_request("key-lemma",
                                          {{"a", "1+0.3i"}, {"b", "0.8"}, {"c", "2+0.2i"},
                                           {"mu", "0.5"}, {"nu", "0.7"}, {"x", "2"},
                                           {"variant", variant}},
                                          1e-6));
        for (const char* a : {"1.5", "0.8"})
            for (const char* b : {"0.7", "1.2"})
                for (const char* mu : {"0.5", "0.9"})
                    for (const char* nu : {"0.5", "1.0"})
                        cfg.checks.push_back(
                            make_request("key-lemma",
                                         {{"a", a}, {"b", b}, {"c", "2.1"}, {"mu", mu}, {"nu", nu},
                                          {"x", "2"}, {"variant", variant}},
                                         1e-6));
    }
}

}  // namespace

SuiteConfig default_suite_config() {
    SuiteConfig cfg;
    const std::vector<std::pair<int, int>> spaces = {{3, 1}, {5, 1}, {7, 3}, {15, 7}};
    const std::vector<double> transform_r = {0.1, 0.5, 1.0, 2.0, 5.0};
    const std::vector<double> full_r = {0.1, 0.3, 0.5, 1.0, 2.0, 5.0};

    for (auto [dn, dz] : spaces)
        for (Complex lam : lambda_grid())
            for (double r : transform_r)
                cfg.checks.push_back(make_request("transform",
                                                  {{"dim-n", std::to_string(dn)},
                                                   {"dim-z", std::to_string(dz)},
                                                   {"lambda", param_str(lam)},
                                                   {"r", param_str(r)}},
                                                  1e-6));

    for (int n = 2; n <= 9; ++n)
        for (Complex lam : lambda_grid())
            for (double r : full_r)
                cfg.checks.push_back(make_request("quadratic-transform",
                                                  {{"n", std::to_string(n)},
                                                   {"lambda", param_str(lam)},
                                                   {"r", param_str(r)}},
                                                  1e-8));

    for (int n = 1; n <= 17; n += 2)
        for (const char* lam : {"1.5", "2+0.5i"})
            for (const char* r : {"0.5", "1"})
                cfg.checks.push_back(make_request(
                    "recurrence", {{"n", std::to_string(n)}, {"lambda", lam}, {"r", r}}, 1e-10));
    for (int n = 2; n <= 6; n += 2)
        for (const char* lam : {"1.5", "2+0.5i"})
            for (const char* r : {"0.5", "1"})
                cfg.checks.push_back(make_request(
                    "recurrence", {{"n", std::to_string(n)}, {"lambda", lam}, {"r", r}}, 1e-4));

    add_section3_batteries(cfg);

    // bundle transform at tau = 2 beta with the gamma-matched constant, where
    // the tau-kernel identity is exact
    const std::vector<std::tuple<int, int, double>> bundles = {
        {7, 3, 2.0}, {15, 7, 6.0}, {5, 3, 2.0}};
    for (auto [dn, dz, tau] : bundles)
        for (const char* lam : {"1.5", "2+0.5i"})
            cfg.checks.push_back(make_request("bundle-transform",
                                              {{"dim-n", std::to_string(dn)},
                                               {"dim-z", std::to_string(dz)},
                                               {"tau", param_str(tau)},
                                               {"lambda", lam},
                                               {"r", "1"},
                                               {"constant", "gamma-matched"}},
                                              1e-6));
    return cfg;
}

namespace {

std::string require_param(const CheckRequest& req, const std::string& key) {
    auto it = req.params.find(key);
    if (it == req.params.end())
        throw UsageError(req.identity + ": missing parameter '" + key + "'");
    return it->second;
}

std::string optional_param(const CheckRequest& req, const std::string& key,
                           const std::string& fallback) {
    auto it = req.params.find(key);
    return it == req.params.end() ? fallback : it->second;
}

}  // namespace

IdentityReport run_check(const CheckRequest& req) {
    using fmt::parse_complex;
    using fmt::parse_double;
    using fmt::parse_int;
    try {
        if (req.identity == "lemma31") {
            return check_lemma31(parse_complex(require_param(req, "a")),
                                 parse_complex(require_param(req, "b")),
                                 parse_complex(require_param(req, "c")),
                                 parse_complex(require_param(req, "mu")),
                                 parse_double(require_param(req, "x")), req.tol);
        }
        if (req.identity == "lemma32") {
            return check_lemma32(parse_complex(require_param(req, "a")),
                                 parse_complex(require_param(req, "b")),
                                 parse_complex(require_param(req, "c")),
                                 parse_complex(require_param(req, "nu")),
                                 parse_double(require_param(req, "x")), req.tol);
        }
        if (req.identity == "key-lemma") {
            std::string variant = optional_param(req, "variant", "plain");
            if (variant != "plain" && variant != "tilde")
                throw UsageError("key-lemma: variant must be plain or tilde");
            return check_key_lemma(parse_complex(require_param(req, "a")),
                                   parse_complex(require_param(req, "b")),
                                   parse_complex(require_param(req, "c")),
                                   parse_complex(require_param(req, "mu")),
                                   parse_complex(require_param(req, "nu")),
                                   parse_double(require_param(req, "x")), req.tol,
                                   variant == "tilde" ? KeyLemmaVariant::tilde
                                                      : KeyLemmaVariant::plain);
        }
        if (req.identity == "quadratic-transform") {
            return check_quadratic_transform(parse_int(require_param(req, "n")),
                                             parse_complex(require_param(req, "lambda")),
                                             parse_double(require_param(req, "r")), req.tol);
        }
        if (req.identity == "recurrence") {
            return check_recurrence(parse_int(require_param(req, "n")),
                                    parse_complex(require_param(req, "lambda")),
                                    parse_double(require_param(req, "r")), req.tol);
        }
        if (req.identity == "transform") {
            kernels::SpaceDescriptor X(parse_int(require_param(req, "dim-n")),
                                       parse_int(require_param(req, "dim-z")));
            return check_transform(X, parse_complex(require_param(req, "lambda")),
                                   parse_double(require_param(req, "r")), req.tol);
        }
        if (req.identity == "bundle-transform") {
            kernels::SpaceDescriptor X(parse_int(require_param(req, "dim-n")),
                                       parse_int(require_param(req, "dim-z")));
            std::string constant = optional_param(req, "constant", "printed");
            if (constant != "printed" && constant != "gamma-matched")
                throw UsageError("bundle-transform: constant must be printed or gamma-matched");
            return check_bundle_transform(
                X, parse_double(require_param(req, "tau")),
                parse_complex(require_param(req, "lambda")), parse_double(require_param(req, "r")),
                req.tol,
                constant == "printed" ? kernels::BundleConstant::printed
                                      : kernels::BundleConstant::gamma_matched);
        }
        throw UsageError("unknown identity '" + req.identity + "'");
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        IdentityReport rep;
        rep.identity_name = req.identity;
        rep.parameters = req.params;
        return skipped(std::move(rep), req.tol, e.what());
    }
}

namespace {

std::string sort_key(const CheckRequest& req) {
    std::string key = req.identity;
    for (const auto& [k, v] : req.params) {
        key += ';';
        key += k;
        key += '=';
        key += v;
    }
    return key;
}

unsigned suite_threads(size_t n_checks) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("HARMONIC_KERNELS_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
        } catch (...) {
            // unparsable cap: keep hardware default
        }
    }
    return std::min<unsigned>(n, static_cast<unsigned>(std::max<size_t>(n_checks, 1)));
}

}  // namespace

std::vector<IdentityReport> run_suite(const SuiteConfig& config) {
    std::vector<CheckRequest> ordered = config.checks;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const CheckRequest& a, const CheckRequest& b) {
                         return sort_key(a) < sort_key(b);
                     });

    std::vector<IdentityReport> reports(ordered.size());
    unsigned n_threads = suite_threads(ordered.size());
    if (n_threads <= 1) {
        for (size_t i = 0; i < ordered.size(); ++i) reports[i] = run_check(ordered[i]);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= ordered.size()) return;
            reports[i] = run_check(ordered[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

}  // namespace harmonic::verify
