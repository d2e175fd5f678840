#include "harmonic/specfun.hpp"

#include <cmath>
#include <limits>

namespace harmonic::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos g = 7, 9 terms. Worst relative error ~1.5e-13 on the test strip.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool near_nonpositive_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    if (z.real() > 0.5) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex lanczos_positive(Complex z) {
    // requires Re z >= 0.5
    z -= 1.0;
    Complex x = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i) x += kLanczosCoef[i] / (z + static_cast<double>(i));
    Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

bool is_integer(double x) { return x == std::round(x); }

}  // namespace

Complex gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("gamma: non-finite argument");
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("gamma: argument within 1e-12 of a nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        return kPi / (std::sin(kPi * z) * lanczos_positive(1.0 - z));
    }
    return lanczos_positive(z);
}

Complex gamma_reciprocal(Complex z) {
    if (near_nonpositive_integer(z, 1e-12)) return {0.0, 0.0};
    return 1.0 / gamma(z);
}

Complex digamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("digamma: non-finite argument");
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("digamma: argument within 1e-12 of a nonpositive integer");
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - kPi * std::cos(kPi * z) / std::sin(kPi * z);
    }
    Complex acc = 0.0;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // asymptotic series, error < 1e-15 once Re z >= 10
    static constexpr double kBern[7] = {
        1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,      -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    Complex inv2 = 1.0 / (z * z);
    Complex sum = std::log(z) - 0.5 / z;
    Complex p = inv2;
    for (double coef : kBern) {
        sum -= coef * p;
        p *= inv2;
    }
    return acc + sum;
}

Complex pochhammer(Complex a, unsigned k) {
    Complex prod = 1.0;
    for (unsigned i = 0; i < k; ++i) prod *= a + static_cast<double>(i);
    return prod;
}

void Hyp2F1Args::validate() const {
    if (!std::isfinite(z)) throw DomainError("hyp2f1: non-finite argument z");
    if (z >= 1.0 - 1e-3) throw DomainError("hyp2f1: argument z must be below 0.999");
    if (near_nonpositive_integer(c, 1e-12))
        throw PoleError("hyp2f1: c within 1e-12 of a nonpositive integer");
}

namespace detail {

Complex hyp2f1_series(Complex a, Complex b, Complex c, double z) {
    // Kahan-compensated sum; stop once |term| <= 1e-17 |sum| for 3 consecutive terms.
    Complex sum = 1.0;
    Complex comp = 0.0;
    Complex term = 1.0;
    int quiet = 0;
    for (int k = 0; k < kSeriesBudget; ++k) {
        double kd = static_cast<double>(k);
        term *= (a + kd) * (b + kd) * z / ((c + kd) * (kd + 1.0));
        Complex y = term - comp;
        Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series budget exhausted at z = " + std::to_string(z));
}

}  // namespace detail

namespace {

// z -> 1/z inversion for z < -1, generic branch (b - a not an integer).
Complex hyp2f1_inversion_generic(Complex a, Complex b, Complex c, double z) {
    double w = 1.0 / z;
    Complex t1 = gamma(c) * gamma(b - a) * gamma_reciprocal(b) * gamma_reciprocal(c - a) *
                 std::pow(Complex(-z), -a) * detail::hyp2f1_series(a, 1.0 - c + a, 1.0 - b + a, w);
    Complex t2 = gamma(c) * gamma(a - b) * gamma_reciprocal(a) * gamma_reciprocal(c - b) *
                 std::pow(Complex(-z), -b) * detail::hyp2f1_series(b, 1.0 - c + b, 1.0 - a + b, w);
    return t1 + t2;
}

// psi(x)/Gamma(x), finite everywhere; equals -(-1)^j j! at x = -j.
Complex digamma_over_gamma(Complex x) {
    if (near_nonpositive_integer(x, 1e-12)) {
        int j = static_cast<int>(std::lround(-x.real()));
        double f = 1.0;
        for (int i = 2; i <= j; ++i) f *= i;
        return {(j % 2 == 0) ? -f : f, 0.0};
    }
    return digamma(x) * gamma_reciprocal(x);
}

// z -> 1/z inversion when b = a + m, m a nonnegative integer (double poles of
// the Mellin-Barnes integrand produce the ln(-z) terms).
Complex hyp2f1_inversion_log(Complex a, int m, Complex c, double z) {
    double mz = -z;       // positive
    double u = 1.0 / mz;  // (-z)^{-1}
    double md = static_cast<double>(m);

    Complex finite = 0.0;
    if (m > 0) {
        // Gamma(c)/Gamma(a+m) (-z)^{-a} sum_{k<m} (a)_k Gamma(m-k)/(k! Gamma(c-a-k)) z^{-k}
        Complex poch = 1.0;
        double kfac = 1.0;
        double zk = 1.0;
        for (int k = 0; k < m; ++k) {
            double kd = static_cast<double>(k);
            if (k > 0) {
                kfac *= kd;
                poch *= a + (kd - 1.0);
                zk /= z;
            }
            finite += poch * gamma(md - kd) * gamma_reciprocal(c - a - kd) / kfac * zk;
        }
        finite *= gamma(c) * gamma_reciprocal(a + md) * std::pow(Complex(mz), -a);
    }

    // Gamma(c) (-1)^m / Gamma(a) (-z)^{-a-m}
    //   sum_n Gamma(a+m+n)/(Gamma(a+m) n! (m+n)!) (-z)^{-n} Q_n
    double logmz = std::log(mz);
    Complex am = a + md;
    double mfac = 1.0;
    for (int i = 2; i <= m; ++i) mfac *= i;
    Complex coef = 1.0 / mfac;
    Complex series = 0.0;
    for (int n = 0; n < 500; ++n) {
        double nd = static_cast<double>(n);
        if (n > 0) coef *= (am + (nd - 1.0)) * u / (nd * (md + nd));
        Complex xn = c - a - (md + nd);
        Complex bracket = logmz + digamma(nd + 1.0) + digamma(md + nd + 1.0) - digamma(am + nd);
        Complex q = gamma_reciprocal(xn) * bracket - digamma_over_gamma(xn);
        Complex term = coef * q;
        series += term;
        if (n >= 2 && std::abs(term) <= 1e-18 * std::abs(series)) break;
    }
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return finite + gamma(c) * sign * gamma_reciprocal(a) * std::pow(Complex(mz), -am) * series;
}

// terminating series when a (or b) is a nonpositive integer; valid for any z
Complex hyp2f1_polynomial(Complex a, Complex b, Complex c, double z, int degree) {
    Complex sum = 1.0;
    Complex term = 1.0;
    for (int k = 0; k < degree; ++k) {
        double kd = static_cast<double>(k);
        term *= (a + kd) * (b + kd) * z / ((c + kd) * (kd + 1.0));
        sum += term;
    }
    return sum;
}

}  // namespace

Complex hyp2f1(const Hyp2F1Args& args) {
    args.validate();
    Complex a = args.a;
    Complex b = args.b;
    Complex c = args.c;
    double z = args.z;

    if (z == 0.0) return 1.0;
    if (near_nonpositive_integer(a, 1e-12))
        return hyp2f1_polynomial(a, b, c, z, static_cast<int>(std::lround(-a.real())));
    if (near_nonpositive_integer(b, 1e-12))
        return hyp2f1_polynomial(b, a, c, z, static_cast<int>(std::lround(-b.real())));
    // binomial collapses (exact parameter coincidences)
    if (b == c) return std::pow(Complex(1.0 - z), -a);
    if (a == c) return std::pow(Complex(1.0 - z), -b);

    // canonical (a,b) order keeps the evaluation exactly symmetric
    if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) std::swap(a, b);

    if (z > 0.0) return detail::hyp2f1_series(a, b, c, z);
    if (z >= -50.0) {
        // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)), mapped argument in (0, 50/51]
        return std::pow(Complex(1.0 - z), -a) * detail::hyp2f1_series(a, c - b, c, z / (z - 1.0));
    }
    // deep negative arguments: 1/z inversion
    Complex d = b - a;
    if (std::abs(d.imag()) <= 1e-12 && std::abs(d.real() - std::round(d.real())) <= 1e-12) {
        int m = static_cast<int>(std::lround(d.real()));
        return hyp2f1_inversion_log(a, m, c, z);
    }
    return hyp2f1_inversion_generic(a, b, c, z);
}

}  // namespace harmonic::specfun
