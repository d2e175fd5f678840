#pragma once

#include <complex>
#include <functional>

#include "harmonic/errors.hpp"

namespace harmonic::kernels {

using Complex = std::complex<double>;

/// Smallest geodesic radius the resolvent evaluators accept by default; the
/// kernels are singular at r = 0 and the hypergeometric argument guard
/// corresponds to r ~ 0.03.
inline constexpr double kDefaultRMin = 0.05;

// Harmonic NA space identified by (dim N, dim Z), dim N including the center.
// dim_z = 0 is the formal real-hyperbolic case (beta = -1/2).
class SpaceDescriptor {
public:
    SpaceDescriptor(int dim_n, int dim_z);

    int dim_n() const { return dim_n_; }
    int dim_z() const { return dim_z_; }
    double sigma() const { return 0.5 * (dim_n_ + dim_z_); }
    double beta() const { return 0.5 * (dim_z_ - 1.0); }
    /// Eligible for the odd-hyperbolic transform: dim_z >= 1 and sigma integral.
    bool transform_eligible() const { return dim_z_ >= 1 && (dim_n_ + dim_z_) % 2 == 0; }

private:
    int dim_n_;
    int dim_z_;
};

// Spectral parameter lambda with Im lambda >= 0 and |lambda| >= 1e-8 (the
// resolvent constants carry a 1/lambda factor).
class SpectralParam {
public:
    SpectralParam(Complex lambda);  // NOLINT: implicit from complex by design

    Complex value() const { return lambda_; }

private:
    Complex lambda_;
};

// Vector bundle parameter tau >= 0.
class BundleParam {
public:
    BundleParam(double tau);  // NOLINT

    double value() const { return tau_; }

private:
    double tau_;
};

// Which §5 normalizing constant a bundle resolvent uses: the printed one has
// Gamma((sigma-i lambda)/2)^2, the gamma-matched one Gamma((sigma-i lambda)/2)
// Gamma((sigma-i lambda)/2 - tau/2). Only the latter turns the tau-kernel
// transform into an exact constant-ratio identity.
enum class BundleConstant { printed, gamma_matched };

/// Resolvent of H^n in the half-argument hypergeometric form
///   C_{n,lambda} (cosh r/2)^{2 i lambda - (n-1)}
///     2F1((n-1)/2 - i lambda, 1/2 - i lambda; 1 - 2 i lambda; sech^2(r/2)).
Complex hyperbolic_resolvent_half(int n, SpectralParam lambda, double r,
                                  double r_min = kDefaultRMin);

/// Resolvent of H^n in the full-argument form (quadratic transformation of the
/// half-argument one):
///   C_n(lambda) (cosh r)^{i lambda - (n-1)/2}
///     2F1(A, A + 1/2; 1 - i lambda; sech^2 r),  A = ((n-1)/2 - i lambda)/2.
Complex hyperbolic_resolvent(int n, SpectralParam lambda, double r, double r_min = kDefaultRMin);

/// Normalized radial eigenfunction of the H^n Laplacian, value 1 at r = 0.
/// Throws ConvergenceError for r > 12.
Complex spherical_function(int n, Complex lambda, double r);

/// Resolvent kernel of the shifted Laplacian on the NA space X:
///   C_X(lambda) (cosh r)^{-sigma + i lambda}
///     2F1((sigma - i lambda)/2, (sigma - i lambda)/2 - beta; 1 - i lambda; sech^2 r).
Complex na_resolvent(const SpaceDescriptor& X, SpectralParam lambda, double r,
                     double r_min = kDefaultRMin);

/// Bundle resolvent R_{X,tau}; beta is replaced by tau/2 in the 2F1 and the
/// constant is chosen by `variant` (see BundleConstant).
Complex bundle_resolvent(const SpaceDescriptor& X, BundleParam tau, SpectralParam lambda, double r,
                         BundleConstant variant = BundleConstant::printed,
                         double r_min = kDefaultRMin);

/// Kernel of the transform onto odd-dimensional hyperbolic resolvents,
///   W_X(r,rho) = 2 pi^{q/2}/Gamma(q/2) cosh^{1-q}(r) (cosh^2 rho - cosh^2 r)^{(q-2)/2},
/// q = dim Z. Strictly positive. Throws DomainError if rho <= r or X is not
/// transform-eligible.
double transform_kernel(const SpaceDescriptor& X, double r, double rho);

/// Same shape with q replaced by tau + 1 (the conjectural bundle kernel).
double bundle_transform_kernel(double tau, double r, double rho);

/// Residual |f'' + (dim_n coth r + dim_z tanh r) f' + (sigma^2 + lambda^2) f|
/// normalized by max(|f|,|f'|,|f''|); derivatives by 5-point central
/// differences with one Richardson refinement step.
double jacobi_ode_residual(const std::function<Complex(double)>& evaluator, int dim_n, int dim_z,
                           Complex lambda, double r, double h);

}  // namespace harmonic::kernels
