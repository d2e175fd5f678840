#include "harmonic/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "harmonic/specfun.hpp"
#include "harmonic/termsum.hpp"

namespace harmonic::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxLevel = 9;

// stable sigmoid(2u) = 1/(1+e^{-2u})
double sigmoid2(double u) {
    if (u >= 0.0) return 1.0 / (1.0 + std::exp(-2.0 * u));
    double e = std::exp(2.0 * u);
    return e / (1.0 + e);
}

struct LevelSum {
    Complex sum{0.0, 0.0};
    long evaluations = 0;
};

void check_finite(Complex v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("quadrature: integrand returned a non-finite value");
}

}  // namespace

namespace detail {

QuadratureResult tanh_sinh(const std::function<Complex(double, double)>& f, double a, double b,
                           double tol) {
    const double width = b - a;
    const double tmax = 6.6;
    long evals = 0;

    // g(t) dt with x = a + width * s(t), s = sigmoid(pi sinh t)
    auto node = [&](double t) -> Complex {
        double u = 0.5 * kPi * std::sinh(t);
        double s = sigmoid2(u);
        double sc = sigmoid2(-u);  // 1 - s without cancellation
        double w = width * kPi * std::cosh(t) * s * sc;
        if (w == 0.0) return {0.0, 0.0};
        double offset = width * s;  // exact distance to the singular endpoint a
        if (offset < 1e-305) return {0.0, 0.0};
        Complex v = f(a + offset, offset);
        check_finite(v);
        ++evals;
        return w * v;
    };

    // level 0: h = 1, then halve; refinement only needs the odd multiples
    double h = 1.0;
    Complex mid = node(0.0);
    Complex total = mid;
    for (int k = 1; k * h <= tmax; ++k) {
        total += node(k * h) + node(-k * h);
    }
    total *= h;

    QuadratureResult out;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        Complex odd{0.0, 0.0};
        for (double t = h; t <= tmax; t += 2.0 * h) {
            odd += node(t) + node(-t);
        }
        Complex refined = 0.5 * total + h * odd;
        double scale = std::max(std::abs(refined), 1e-300);
        err = std::abs(refined - total) / scale;
        total = refined;
        if (level >= 2 && err <= tol) {
            out.converged = true;
            break;
        }
    }
    out.value = total;
    out.error_estimate = err;
    out.evaluations = evals;
    return out;
}

QuadratureResult exp_sinh(const std::function<Complex(double)>& f, double a, double tol) {
    const double tmax = 6.2;
    long evals = 0;

    auto node = [&](double t) -> Complex {
        double u = 0.5 * kPi * std::sinh(t);
        if (u > 700.0) return {0.0, 0.0};  // abscissa beyond 1e300; decayed integrands only
        double g = std::exp(u);
        double w = g * 0.5 * kPi * std::cosh(t);
        if (w == 0.0 || !std::isfinite(w)) return {0.0, 0.0};
        Complex v = f(a + g);
        check_finite(v);
        ++evals;
        return w * v;
    };

    double h = 1.0;
    Complex total = node(0.0);
    for (int k = 1; k * h <= tmax; ++k) total += node(k * h) + node(-k * h);
    total *= h;

    QuadratureResult out;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        Complex odd{0.0, 0.0};
        for (double t = h; t <= tmax; t += 2.0 * h) odd += node(t) + node(-t);
        Complex refined = 0.5 * total + h * odd;
        double scale = std::max(std::abs(refined), 1e-300);
        err = std::abs(refined - total) / scale;
        total = refined;
        if (level >= 2 && err <= tol) {
            out.converged = true;
            break;
        }
    }
    out.value = total;
    out.error_estimate = err;
    out.evaluations = evals;
    return out;
}

}  // namespace detail

QuadratureResult integrate_semi_infinite(const Integrand& f, double tol) {
    if (!(f.singular_exponent > -1.0))
        throw DomainError("integrate_semi_infinite: singular exponent must exceed -1");
    if (!(tol >= 1e-13)) throw DomainError("integrate_semi_infinite: tol must be >= 1e-13");
    if (!f.evaluator) throw DomainError("integrate_semi_infinite: missing evaluator");

    double delta = std::max(1.0, std::abs(f.lower));
    double split = f.lower + delta;
    QuadratureResult head = detail::tanh_sinh(f.evaluator, f.lower, split, 0.5 * tol);
    QuadratureResult tail = detail::exp_sinh(
        [&](double y) { return f.evaluator(y, y - f.lower); }, split, 0.5 * tol);

    QuadratureResult out;
    out.value = head.value + tail.value;
    out.evaluations = head.evaluations + tail.evaluations;
    double abs_err =
        head.error_estimate * std::abs(head.value) + tail.error_estimate * std::abs(tail.value);
    out.error_estimate = abs_err / std::max(std::abs(out.value), 1e-300);
    out.converged = head.converged && tail.converged && out.error_estimate <= tol;
    return out;
}

namespace {

QuadratureResult substituted_transform(const kernels::SpaceDescriptor& X, double sinh_exponent,
                                       double prefactor, kernels::SpectralParam lambda, double r,
                                       double tol) {
    if (!(r > 0.0)) throw DomainError("integrate_transform: r must be positive");
    int sigma2 = X.dim_n() + X.dim_z();
    int sigma = sigma2 / 2;
    Complex lam = lambda.value();
    double cr = std::cosh(r);
    double sr_half2 = std::sinh(0.5 * r);
    // decay exponent of the substituted integrand is sinh_exponent - sigma
    double cap = std::min({60.0, 600.0 / std::max(sinh_exponent, 1.0), 600.0 / sigma});

    auto g = [&, sigma](double t) -> Complex {
        if (t >= cap) return {0.0, 0.0};
        // cosh(rho) = cosh(r) cosh(t); assemble rho, stable near t = 0
        double st_half = std::sinh(0.5 * t);
        double cm1 = cr * 2.0 * st_half * st_half + 2.0 * sr_half2 * sr_half2;
        double C = 1.0 + cm1;
        double sinh_rho = std::sqrt(cm1 * (C + 1.0));
        double rho = std::log1p(cm1 + sinh_rho);
        double weight = (sinh_exponent == 0.0) ? 1.0 : std::pow(std::sinh(t), sinh_exponent);
        if (weight == 0.0) return {0.0, 0.0};
        return weight * closedform::odd_resolvent(sigma, lam, rho);
    };

    QuadratureResult res = detail::exp_sinh(g, 0.0, tol);
    res.value *= prefactor;
    return res;
}

}  // namespace

QuadratureResult integrate_transform(const kernels::SpaceDescriptor& X,
                                     kernels::SpectralParam lambda, double r, double tol) {
    if (!X.transform_eligible())
        throw DomainError("integrate_transform: descriptor is not transform-eligible");
    double q = X.dim_z();
    double pref = 2.0 * std::pow(kPi, 0.5 * q) / std::tgamma(0.5 * q);
    return substituted_transform(X, q - 1.0, pref, lambda, r, tol);
}

QuadratureResult integrate_bundle_transform(const kernels::SpaceDescriptor& X, double tau,
                                            kernels::SpectralParam lambda, double r, double tol) {
    if ((X.dim_n() + X.dim_z()) % 2 != 0)
        throw DomainError("integrate_bundle_transform: sigma must be integral");
    if (!(tau > 0.0)) throw DomainError("integrate_bundle_transform: tau must be positive");
    double pref = 2.0 * std::pow(kPi, 0.5 * (tau + 1.0)) / std::tgamma(0.5 * (tau + 1.0));
    return substituted_transform(X, tau, pref, lambda, r, tol);
}

}  // namespace harmonic::quadrature
