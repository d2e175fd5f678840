#include "harmonic/kernels.hpp"

#include <cmath>
#include <string>

#include "harmonic/detail/finite_diff.hpp"
#include "harmonic/specfun.hpp"

namespace harmonic::kernels {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

double sech2(double x) {
    double c = std::cosh(x);
    return 1.0 / (c * c);
}

void check_radius(double r, double r_min) {
    if (!(r > 0.0) || r < r_min)
        throw DomainError("resolvent evaluation needs r >= " + std::to_string(r_min));
}

}  // namespace

SpaceDescriptor::SpaceDescriptor(int dim_n, int dim_z) : dim_n_(dim_n), dim_z_(dim_z) {
    if (dim_n < 0 || dim_z < 0) throw DomainError("SpaceDescriptor: dimensions must be nonnegative");
    if (dim_z == 0 && dim_n == 0) throw DomainError("SpaceDescriptor: dim N must be positive");
    if (dim_z >= 1 && dim_n <= dim_z)
        throw DomainError("SpaceDescriptor: dim N must exceed dim Z");
}

SpectralParam::SpectralParam(Complex lambda) : lambda_(lambda) {
    if (!(lambda.imag() >= 0.0))
        throw DomainError("SpectralParam: Im lambda must be nonnegative");
    if (std::abs(lambda) < 1e-8) throw DomainError("SpectralParam: |lambda| must be >= 1e-8");
}

BundleParam::BundleParam(double tau) : tau_(tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("BundleParam: tau must be finite and >= 0");
}

Complex hyperbolic_resolvent_half(int n, SpectralParam lambda, double r, double r_min) {
    if (n < 1) throw DomainError("hyperbolic_resolvent_half: n must be >= 1");
    check_radius(r, r_min);
    Complex il = kI * lambda.value();
    double z = sech2(r / 2.0);
    if (z >= 1.0 - 1e-3)
        throw DomainError("hyperbolic_resolvent_half: r below the half-argument domain");
    Complex a1 = 0.5 * (n - 1.0) - il;
    Complex C = std::exp(-(static_cast<double>(n) - 2.0 * il) * std::log(2.0)) *
                std::pow(kPi, -0.5 * (n - 1.0)) * specfun::gamma(a1) /
                specfun::gamma(1.0 - il);
    Complex power = std::pow(Complex(std::cosh(r / 2.0)), 2.0 * il - (n - 1.0));
    return C * power * specfun::hyp2f1(a1, 0.5 - il, 1.0 - 2.0 * il, z);
}

Complex hyperbolic_resolvent(int n, SpectralParam lambda, double r, double r_min) {
    if (n < 1) throw DomainError("hyperbolic_resolvent: n must be >= 1");
    check_radius(r, r_min);
    Complex il = kI * lambda.value();
    Complex A = 0.5 * (0.5 * (n - 1.0) - il);
    Complex C = specfun::gamma(A) * specfun::gamma(A + 0.5) /
                (4.0 * std::pow(kPi, 0.5 * n) * specfun::gamma(1.0 - il));
    Complex power = std::pow(Complex(std::cosh(r)), il - 0.5 * (n - 1.0));
    return C * power * specfun::hyp2f1(A, A + 0.5, 1.0 - il, sech2(r));
}

Complex spherical_function(int n, Complex lambda, double r) {
    if (n < 2) throw DomainError("spherical_function: n must be >= 2");
    if (!(r >= 0.0)) throw DomainError("spherical_function: r must be nonnegative");
    if (r > 12.0) throw ConvergenceError("spherical_function: r > 12 outside the series range");
    if (r == 0.0) return 1.0;
    // Evaluated through the half-argument quadratic transformation
    //   2F1(a, b; a+b+1/2; -sinh^2 r) = 2F1(2a, 2b; a+b+1/2; -sinh^2(r/2)),
    // which applies since c = n/2 = a+b+1/2 identically; the Pfaff map inside
    // hyp2f1 then sees tanh^2(r/2) instead of tanh^2(r) and stays within the
    // series budget over the whole guarded range.
    Complex il = kI * lambda;
    double h = std::sinh(r / 2.0);
    return specfun::hyp2f1(0.5 * (n - 1.0) - il, 0.5 * (n - 1.0) + il, 0.5 * n, -h * h);
}

Complex na_resolvent(const SpaceDescriptor& X, SpectralParam lambda, double r, double r_min) {
    check_radius(r, r_min);
    Complex il = kI * lambda.value();
    double sigma = X.sigma();
    Complex A = 0.5 * (sigma - il);
    Complex B = A - X.beta();
    Complex C = std::pow(kPi, -0.5 * (X.dim_n() + 1.0)) * specfun::gamma(A) * specfun::gamma(B) /
                (4.0 * specfun::gamma(1.0 - il));
    Complex power = std::pow(Complex(std::cosh(r)), -sigma + il);
    return C * power * specfun::hyp2f1(A, B, 1.0 - il, sech2(r));
}

Complex bundle_resolvent(const SpaceDescriptor& X, BundleParam tau, SpectralParam lambda, double r,
                         BundleConstant variant, double r_min) {
    check_radius(r, r_min);
    Complex il = kI * lambda.value();
    double sigma = X.sigma();
    Complex A = 0.5 * (sigma - il);
    Complex B = A - 0.5 * tau.value();
    Complex second = (variant == BundleConstant::printed) ? specfun::gamma(A) : specfun::gamma(B);
    Complex C = std::pow(kPi, -0.5 * (X.dim_n() + 1.0)) * specfun::gamma(A) * second /
                (4.0 * specfun::gamma(1.0 - il));
    Complex power = std::pow(Complex(std::cosh(r)), -sigma + il);
    return C * power * specfun::hyp2f1(A, B, 1.0 - il, sech2(r));
}

double transform_kernel(const SpaceDescriptor& X, double r, double rho) {
    if (!X.transform_eligible())
        throw DomainError("transform_kernel: descriptor is not transform-eligible");
    if (!(rho > r) || !(r > 0.0)) throw DomainError("transform_kernel: need rho > r > 0");
    double q = X.dim_z();
    // cosh^2 rho - cosh^2 r = (cosh rho - cosh r)(cosh rho + cosh r), the first
    // factor via the product form to keep rho -> r stable
    double diff = 2.0 * std::sinh(0.5 * (rho + r)) * std::sinh(0.5 * (rho - r)) *
                  (std::cosh(rho) + std::cosh(r));
    double pref = 2.0 * std::pow(kPi, 0.5 * q) / std::tgamma(0.5 * q);
    return pref * std::pow(std::cosh(r), 1.0 - q) * std::pow(diff, 0.5 * (q - 2.0));
}

double bundle_transform_kernel(double tau, double r, double rho) {
    if (!(tau > 0.0)) throw DomainError("bundle_transform_kernel: tau must be positive");
    if (!(rho > r) || !(r > 0.0)) throw DomainError("bundle_transform_kernel: need rho > r > 0");
    double diff = 2.0 * std::sinh(0.5 * (rho + r)) * std::sinh(0.5 * (rho - r)) *
                  (std::cosh(rho) + std::cosh(r));
    double pref = 2.0 * std::pow(kPi, 0.5 * (tau + 1.0)) / std::tgamma(0.5 * (tau + 1.0));
    return pref * std::pow(std::cosh(r), -tau) * std::pow(diff, 0.5 * (tau - 1.0));
}

double jacobi_ode_residual(const std::function<Complex(double)>& evaluator, int dim_n, int dim_z,
                           Complex lambda, double r, double h) {
    if (!(h > 0.0) || !(r - 2.0 * h > 0.0))
        throw DomainError("jacobi_ode_residual: stencil must stay inside (0, inf)");
    auto d1 = detail::richardson_derivative1(evaluator, r, h);
    auto d2 = detail::richardson_derivative2(evaluator, r, h);
    Complex f = evaluator(r);
    double sigma = 0.5 * (dim_n + dim_z);
    Complex res = d2 + (dim_n / std::tanh(r) + dim_z * std::tanh(r)) * d1 +
                  (sigma * sigma + lambda * lambda) * f;
    double scale = std::max({std::abs(f), std::abs(d1), std::abs(d2)});
    if (scale == 0.0) return std::abs(res);
    return std::abs(res) / scale;
}

}  // namespace harmonic::kernels
