#pragma once

#include <complex>
#include <functional>

#include "harmonic/errors.hpp"
#include "harmonic/kernels.hpp"

namespace harmonic::quadrature {

using Complex = std::complex<double>;

// Integrand on (lower, infinity). The evaluator receives both the abscissa y
// and the exact offset y - lower, so endpoint factors like (y-x)^{mu-1} can be
// formed without cancellation arbitrarily close to the endpoint.
struct Integrand {
    std::function<Complex(double y, double offset)> evaluator;
    double lower = 0.0;
    // integrand ~ (y - lower)^alpha near the endpoint; alpha > -1 required
    double singular_exponent = 0.0;
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;  // relative, from level-doubling differences
    long evaluations = 0;
    bool converged = false;
};

/// Semi-infinite integral with an algebraic endpoint singularity and a
/// decaying tail: tanh-sinh on [lower, lower+Delta], exp-sinh beyond,
/// Delta = max(1, |lower|). Throws DomainError for alpha <= -1 or tol < 1e-13.
QuadratureResult integrate_semi_infinite(const Integrand& f, double tol);

/// Transform integral int_r^inf W_X(r,rho) R_Y(lambda,rho) sinh(rho) drho with
/// Y = H^{2 sigma + 1}, via the substitution cosh(rho) = cosh(r) cosh(t) which
/// removes the endpoint singularity exactly:
///   (2 pi^{q/2} / Gamma(q/2)) int_0^inf sinh^{q-1}(t) R_Y(lambda, rho(t)) dt.
QuadratureResult integrate_transform(const kernels::SpaceDescriptor& X,
                                     kernels::SpectralParam lambda, double r, double tol);

/// Same substitution for the tau-parameter kernel W_{X,tau}:
///   (2 pi^{(tau+1)/2} / Gamma((tau+1)/2)) int_0^inf sinh^tau(t) R_Y(lambda, rho(t)) dt.
QuadratureResult integrate_bundle_transform(const kernels::SpaceDescriptor& X, double tau,
                                            kernels::SpectralParam lambda, double r, double tol);

namespace detail {
// Finite-interval tanh-sinh with the singular endpoint at a. Exposed for tests.
QuadratureResult tanh_sinh(const std::function<Complex(double, double)>& f, double a, double b,
                           double tol);
// [a, infinity), integrand smooth at a. Exposed for tests.
QuadratureResult exp_sinh(const std::function<Complex(double)>& f, double a, double tol);
}  // namespace detail

}  // namespace harmonic::quadrature
