#pragma once

#include <complex>
#include <map>
#include <vector>

#include "harmonic/errors.hpp"

namespace harmonic::closedform {

using Complex = std::complex<double>;

// Exact wide integer for symbolic coefficients; every arithmetic op is
// overflow-checked. Coefficients of D^m e^{i lambda r} fit comfortably
// through m = 12.
class Int128 {
public:
    Int128() = default;
    Int128(long long v) : v_(v) {}  // NOLINT: implicit by design

    Int128 operator+(Int128 o) const;
    Int128 operator-(Int128 o) const;
    Int128 operator*(Int128 o) const;
    Int128 operator-() const { return raw(-v_); }
    bool operator==(Int128 o) const { return v_ == o.v_; }
    bool operator!=(Int128 o) const { return v_ != o.v_; }
    bool is_zero() const { return v_ == 0; }
    double to_double() const { return static_cast<double>(v_); }

private:
    static Int128 raw(__int128 v) {
        Int128 r;
        r.v_ = v;
        return r;
    }
    __int128 v_ = 0;
};

// Polynomial in the formal variable (i lambda), exact integer coefficients,
// coefficients[k] multiplies (i lambda)^k. Trailing zeros are normalized away;
// the zero polynomial is the empty vector.
class LambdaPoly {
public:
    LambdaPoly() = default;
    explicit LambdaPoly(std::vector<Int128> coefficients);
    static LambdaPoly constant(long long c);

    const std::vector<Int128>& coefficients() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }

    LambdaPoly operator+(const LambdaPoly& o) const;
    LambdaPoly scaled(Int128 s) const;
    LambdaPoly shifted() const;  // multiply by (i lambda)

    /// Horner evaluation at w = i*lambda.
    Complex eval(Complex w) const;

    bool operator==(const LambdaPoly& o) const { return coef_ == o.coef_; }

private:
    void normalize();
    std::vector<Int128> coef_;
};

// Sum of terms c_{k,j}(i lambda) csch^k(r) coth^j(r), with an implicit global
// factor e^{i lambda r}. Keys are (csch power, coth power). Immutable in
// spirit: operations return new values. No stored polynomial is zero.
class TermSum {
public:
    TermSum() = default;

    static TermSum one();  // the bare e^{i lambda r}

    const std::map<std::pair<int, int>, LambdaPoly>& terms() const { return terms_; }
    void add_term(int csch_pow, int coth_pow, const LambdaPoly& p);

    bool operator==(const TermSum& o) const { return terms_ == o.terms_; }

private:
    std::map<std::pair<int, int>, LambdaPoly> terms_;
};

/// Image under D = (1/sinh r) d/dr, using d/dr csch = -csch coth and
/// d/dr coth = -csch^2. Exact integer coefficients.
TermSum apply_D(const TermSum& t);

/// Exact d/dr (without the csch factor); includes the chain-rule i*lambda
/// term from the global e^{i lambda r}.
TermSum differentiate(const TermSum& t);

/// Numeric value e^{i lambda r} sum c_{k,j}(i lambda) csch^k(r) coth^j(r).
/// Throws DomainError for r <= 0.
Complex eval_term_sum(const TermSum& t, Complex lambda, double r);

/// D^m e^{i lambda r} as a TermSum; computed once per m and cached
/// (thread-safe, read-mostly).
const TermSum& iterated_terms(int m);

/// C_m(lambda) = (-1)^{m+1} / (2 i lambda (2 pi)^m).
Complex odd_constant(int m, Complex lambda);

/// Resolvent kernel of the (2m+1)-dimensional real hyperbolic space in
/// elementary functions: C_m(lambda) D^m e^{i lambda r}.
/// Throws PoleError for lambda within 1e-12 of 0, DomainError for r <= 0.
Complex odd_resolvent(int m, Complex lambda, double r);

}  // namespace harmonic::closedform
