#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "harmonic/kernels.hpp"

namespace harmonic::verify {

using Complex = std::complex<double>;

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

// One certified identity instance: both sides, errors, verdict.
struct IdentityReport {
    std::string identity_name;
    std::map<std::string, std::string> parameters;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;   // |lhs-rhs| / max(|lhs|,|rhs|,1e-300)
    double quad_error = 0.0;
    double tolerance = 0.0;
    Status status = Status::skipped;
};

enum class KeyLemmaVariant { plain, tilde };

/// x^{-b} 2F1(a,b;c;1/x) = Gamma(b+mu)/(Gamma(b)Gamma(mu))
///   int_x^inf y^{-b-mu} (y-x)^{mu-1} 2F1(a,b+mu;c;1/y) dy.
IdentityReport check_lemma31(Complex a, Complex b, Complex c, Complex mu, double x, double tol);

/// Corrected form x^{nu-c} 2F1(a,b;c;1/x) = Gamma(c)/(Gamma(c-nu)Gamma(nu))
///   int_x^inf y^{-c} (y-x)^{nu-1} 2F1(a,b;c-nu;1/y) dy;
/// the printed exponent x^{c-nu} is also evaluated and its discrepancy is
/// recorded in the parameters.
IdentityReport check_lemma32(Complex a, Complex b, Complex c, Complex nu, double x, double tol);

/// Key integral identity raising (a,b) to (a+mu, b+nu) under the kernel
/// W(x,y) = (y-x)^{mu+nu-1} 2F1(mu, a-b+mu; mu+nu; 1-y/x); the tilde variant
/// swaps the roles of (a,mu) and (b,nu). nu = 0 degenerates to the lemma31
/// shape (the kernel collapses to a pure power).
IdentityReport check_key_lemma(Complex a, Complex b, Complex c, Complex mu, Complex nu, double x,
                               double tol, KeyLemmaVariant variant = KeyLemmaVariant::plain);

/// Half-argument vs full-argument hyperbolic resolvent (quadratic transformation).
IdentityReport check_quadratic_transform(int n, kernels::SpectralParam lambda, double r,
                                         double tol);

/// -1/(2 pi sinh r) d/dr R_n = R_{n+2}; exact TermSum derivative for odd n,
/// 5-point finite differences otherwise.
IdentityReport check_recurrence(int n, kernels::SpectralParam lambda, double r, double tol);

/// NA resolvent against the integral transform of the odd-dimensional
/// hyperbolic resolvent; the fitted ratio lhs/rhs is recorded.
IdentityReport check_transform(const kernels::SpaceDescriptor& X, kernels::SpectralParam lambda,
                               double r, double tol);

/// Conjectural tau-kernel transform for bundle resolvents; failure is a
/// finding, the fitted constant ratio is always recorded.
IdentityReport check_bundle_transform(const kernels::SpaceDescriptor& X, kernels::BundleParam tau,
                                      kernels::SpectralParam lambda, double r, double tol,
                                      kernels::BundleConstant variant = kernels::BundleConstant::printed);

// One requested check inside a suite run: identity name + stringly-typed
// parameters (same encoding the CLI and config files use).
struct CheckRequest {
    std::string identity;
    std::map<std::string, std::string> params;
    double tol = 1e-6;
};

struct SuiteConfig {
    std::vector<CheckRequest> checks;
};

/// The full default battery (transform grids, quadratic transform, recurrence,
/// the section-3 identity batteries, bundle rows at tau = 2 beta).
SuiteConfig default_suite_config();

/// Runs every requested check, deterministically ordered by (identity,
/// parameters); individual failures and precondition violations are recorded
/// in the reports, never thrown. Honors HARMONIC_KERNELS_THREADS.
std::vector<IdentityReport> run_suite(const SuiteConfig& config);

/// Dispatch a single request by name (used by the CLI and run_suite).
IdentityReport run_check(const CheckRequest& request);

}  // namespace harmonic::verify
