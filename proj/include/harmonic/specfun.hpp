#pragma once

#include <complex>

#include "harmonic/errors.hpp"

namespace harmonic::specfun {

using Complex = std::complex<double>;

/// Euler Gamma function for complex argument, Lanczos approximation with
/// reflection for Re z < 1/2. Relative accuracy ~1e-13 on the strip
/// |Im z| <= 20, -10 <= Re z <= 20.
/// Throws PoleError within 1e-12 of a nonpositive integer.
Complex gamma(Complex z);

/// 1/Gamma(z); entire, returns 0 at the poles of Gamma.
Complex gamma_reciprocal(Complex z);

/// Digamma (psi) function for complex argument; asymptotic series after
/// argument shift, reflection for Re z < 1/2.
/// Throws PoleError within 1e-12 of a nonpositive integer.
Complex digamma(Complex z);

/// Rising factorial a (a+1) ... (a+k-1); k = 0 gives exactly 1.
Complex pochhammer(Complex a, unsigned k);

/// Arguments of the Gauss hypergeometric function 2F1(a,b;c;z), z real.
struct Hyp2F1Args {
    Complex a;
    Complex b;
    Complex c;
    double z = 0.0;

    /// Throws PoleError if c is within 1e-12 of a nonpositive integer,
    /// DomainError if z >= 1 - 1e-3 or z is not finite.
    void validate() const;
};

/// Gauss hypergeometric function 2F1(a,b;c;z) for real z < 0.999.
///
/// Evaluation routes: direct power series on [0, 0.999); Pfaff transformation
/// into (0,1) on [-50, 0); z -> 1/z inversion below -50 (the log-case
/// b - a in Z handled explicitly, so kernels like 2F1(1/2,1/2;1;z) stay
/// evaluable down the whole negative axis).
Complex hyp2f1(const Hyp2F1Args& args);

inline Complex hyp2f1(Complex a, Complex b, Complex c, double z) {
    return hyp2f1(Hyp2F1Args{a, b, c, z});
}

namespace detail {
// Raw power series sum, |z| < 1. Exposed for cross-route tests.
Complex hyp2f1_series(Complex a, Complex b, Complex c, double z);
// Series term budget; ~4e4 terms suffice at the z = 0.999 guard.
inline constexpr int kSeriesBudget = 200000;
}  // namespace detail

}  // namespace harmonic::specfun
