#pragma once

#include <complex>
#include <functional>

namespace harmonic::detail {

using Complex = std::complex<double>;

// 5-point central first derivative, O(h^4)
inline Complex central_derivative1(const std::function<Complex(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

// 5-point central second derivative, O(h^4)
inline Complex central_derivative2(const std::function<Complex(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
           (12.0 * h * h);
}

// one Richardson step on the O(h^4) stencils -> O(h^6)
inline Complex richardson_derivative1(const std::function<Complex(double)>& f, double x, double h) {
    Complex coarse = central_derivative1(f, x, h);
    Complex fine = central_derivative1(f, x, h / 2.0);
    return (16.0 * fine - coarse) / 15.0;
}

inline Complex richardson_derivative2(const std::function<Complex(double)>& f, double x, double h) {
    Complex coarse = central_derivative2(f, x, h);
    Complex fine = central_derivative2(f, x, h / 2.0);
    return (16.0 * fine - coarse) / 15.0;
}

}  // namespace harmonic::detail
