#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "harmonic/specfun.hpp"
#include "support/oracle_values.hpp"

using namespace harmonic;
using specfun::Complex;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max({std::abs(got), std::abs(want), 1e-300});
}

}  // namespace

TEST_CASE("gamma: fixed points") {
    CHECK(rel_err(specfun::gamma(1.0), 1.0) < 1e-13);
    CHECK(rel_err(specfun::gamma(0.5), std::sqrt(kPi)) < 1e-13);
    CHECK(rel_err(specfun::gamma({1.0, 1.0}), oracle::kGamma1PlusI) < 1e-12);
    CHECK(rel_err(specfun::gamma({0.5, 14.5}), oracle::kGammaHalfPlus14I) < 1e-12);
    CHECK(rel_err(specfun::gamma(-2.5), oracle::kGammaMinus2p5) < 1e-12);
    CHECK(rel_err(specfun::gamma({-5.5, 3.0}), oracle::kGammaM5p5P3I) < 1e-12);
    CHECK(rel_err(specfun::gamma({12.3, -7.0}), oracle::kGamma12p3M7I) < 1e-12);
    CHECK(rel_err(specfun::gamma({19.5, 19.5}), oracle::kGamma19p5P19I) < 1e-12);
}

TEST_CASE("gamma: poles raise") {
    CHECK_THROWS_AS(specfun::gamma(0.0), PoleError);
    CHECK_THROWS_AS(specfun::gamma(-3.0), PoleError);
    CHECK_THROWS_AS(specfun::gamma({-7.0, 1e-14}), PoleError);
    CHECK(specfun::gamma_reciprocal(-4.0) == Complex{0.0, 0.0});
}

TEST_CASE("gamma: recurrence over the strip") {
    std::mt19937_64 rng(20240217);
    std::uniform_real_distribution<double> re(-9.5, 19.0);
    std::uniform_real_distribution<double> im(-20.0, 20.0);
    int tested = 0;
    while (tested < 1000) {
        Complex z{re(rng), im(rng)};
        if (std::abs(z.imag()) < 0.1 && z.real() < 0.6) continue;  // pole neighborhood
        CHECK(rel_err(specfun::gamma(z + 1.0), z * specfun::gamma(z)) < 1e-12);
        ++tested;
    }
}

TEST_CASE("gamma: reflection and duplication") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-8.0, 8.0);
    std::uniform_real_distribution<double> im(0.2, 9.0);
    for (int i = 0; i < 300; ++i) {
        Complex z{re(rng), im(rng)};
        Complex lhs = specfun::gamma(z) * specfun::gamma(1.0 - z);
        Complex rhs = kPi / std::sin(kPi * z);
        CHECK(rel_err(lhs, rhs) < 1e-11);

        Complex a{std::abs(re(rng)) + 0.3, im(rng)};
        Complex dup = specfun::gamma(a) * specfun::gamma(a + 0.5) *
                      std::pow(Complex(2.0), 2.0 * a - 1.0) / std::sqrt(kPi);
        CHECK(rel_err(specfun::gamma(2.0 * a), dup) < 1e-11);
    }
}

TEST_CASE("digamma: fixed points") {
    CHECK(rel_err(specfun::digamma(1.0), oracle::kDigamma1) < 1e-13);
    CHECK(rel_err(specfun::digamma(0.5), oracle::kDigammaHalf) < 1e-13);
    CHECK(rel_err(specfun::digamma({1.0, 1.0}), oracle::kDigamma1PlusI) < 1e-13);
    CHECK(rel_err(specfun::digamma({-2.3, 0.7}), oracle::kDigammaM2p3P0p7I) < 1e-13);
    CHECK(rel_err(specfun::digamma({15.5, -4.0}), oracle::kDigamma15p5M4I) < 1e-13);
    CHECK_THROWS_AS(specfun::digamma(-2.0), PoleError);
}

TEST_CASE("pochhammer") {
    CHECK(specfun::pochhammer({3.7, -0.4}, 0) == Complex{1.0, 0.0});
    CHECK(rel_err(specfun::pochhammer(1.0, 4), 24.0) == 0.0);
    CHECK(rel_err(specfun::pochhammer(2.5, 2), 8.75) < 1e-15);
}

TEST_CASE("hyp2f1: trivial and closed forms") {
    CHECK(specfun::hyp2f1({1.3, 0.2}, 2.0, 3.5, 0.0) == Complex{1.0, 0.0});
    CHECK(rel_err(specfun::hyp2f1(0.5, 1.0, 1.0, 0.5), std::sqrt(2.0)) < 1e-12);
    CHECK(rel_err(specfun::hyp2f1(1.0, 1.0, 2.0, 0.5), 2.0 * std::log(2.0)) < 1e-12);
    CHECK(rel_err(specfun::hyp2f1(1.5, 1.0, 2.0, 0.5), 4.0 * (std::sqrt(2.0) - 1.0)) < 1e-12);
}

TEST_CASE("hyp2f1: closed forms across the z range") {
    // (1-z)^{-a} and -log(1-z)/z, |z| <= 0.9
    for (double z = -0.9; z <= 0.901; z += 0.15) {
        if (z == 0.0) continue;
        CHECK(rel_err(specfun::hyp2f1(0.5, 1.0, 1.0, z), std::pow(1.0 - z, -0.5)) < 1e-12);
        CHECK(rel_err(specfun::hyp2f1(1.0, 1.0, 2.0, z), -std::log(1.0 - z) / z) < 1e-12);
    }
}

TEST_CASE("hyp2f1: oracle values, series and Pfaff routes") {
    CHECK(rel_err(specfun::hyp2f1(1.5, 2.25, 3.8, 0.75), oracle::kHyp2f1A) < 1e-12);
    CHECK(rel_err(specfun::hyp2f1({0.5, 0.5}, {1.0, -0.25}, {2.0, 0.1}, 0.6), oracle::kHyp2f1B) <
          1e-12);
    CHECK(rel_err(specfun::hyp2f1(1.2, 0.8, 2.5, -30.0), oracle::kHyp2f1C) < 1e-12);
    CHECK(rel_err(specfun::hyp2f1(1.1, 0.6, 1.9, 0.999), oracle::kHyp2f1I) < 1e-11);
    CHECK(rel_err(specfun::hyp2f1(0.9, 0.9, 1.8, 0.995), oracle::kHyp2f1K) < 1e-11);
}

TEST_CASE("hyp2f1: oracle values, inversion routes") {
    CHECK(rel_err(specfun::hyp2f1(0.5, 1.25, 1.7, -5000.0), oracle::kHyp2f1D) < 1e-12);
    CHECK(rel_err(specfun::hyp2f1(0.5, 0.5, 1.0, -1000.0), oracle::kHyp2f1E) < 1e-12);
    CHECK(rel_err(specfun::hyp2f1(0.75, 2.75, 2.2, -1e8), oracle::kHyp2f1F) < 1e-12);
    CHECK(rel_err(specfun::hyp2f1({0.3, 0.2}, {1.1, -0.4}, {1.6, 0.1}, -200.0), oracle::kHyp2f1G) <
          1e-12);
    CHECK(rel_err(specfun::hyp2f1(2.0, 1.0, 3.0, -75.0), oracle::kHyp2f1H) < 1e-12);
    CHECK(rel_err(specfun::hyp2f1({0.5, 0.3}, {0.5, 0.3}, {1.0, 0.1}, -500.0), oracle::kHyp2f1J) <
          1e-12);
}

TEST_CASE("hyp2f1: route consistency across the -50 seam") {
    // Pfaff route just above the seam vs inversion just below
    for (double z : {-49.9, -50.1, -45.0, -55.0}) {
        Complex a{0.6, 0.0}, b{1.3, 0.0}, c{2.2, 0.0};
        Complex pfaff = std::pow(Complex(1.0 - z), -a) *
                        specfun::detail::hyp2f1_series(a, c - b, c, z / (z - 1.0));
        CHECK(rel_err(specfun::hyp2f1(a, b, c, z), pfaff) < 1e-11);
    }
}

TEST_CASE("hyp2f1: symmetry in (a,b)") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> par(0.1, 3.0);
    std::uniform_real_distribution<double> im(-1.0, 1.0);
    std::uniform_real_distribution<double> zs(-49.0, 0.99);
    for (int i = 0; i < 200; ++i) {
        Complex a{par(rng), im(rng)};
        Complex b{par(rng), im(rng)};
        Complex c{par(rng) + 0.5, im(rng)};
        double z = zs(rng);
        Complex ab = specfun::hyp2f1(a, b, c, z);
        Complex ba = specfun::hyp2f1(b, a, c, z);
        CHECK(rel_err(ab, ba) < 1e-14);
    }
}

TEST_CASE("hyp2f1: Pfaff transformation invariant") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> par(0.2, 2.5);
    std::uniform_real_distribution<double> zs(-50.0, -0.01);
    for (int i = 0; i < 200; ++i) {
        Complex a{par(rng), 0.0};
        Complex b{par(rng), 0.0};
        Complex c{par(rng) + 0.6, 0.0};
        double z = zs(rng);
        Complex lhs = specfun::hyp2f1(a, b, c, z);
        Complex rhs = std::pow(Complex(1.0 - z), -a) * specfun::hyp2f1(a, c - b, c, z / (z - 1.0));
        CHECK(rel_err(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("hyp2f1: differential contiguity by central differences") {
    // d/dz [z^a 2F1(a,b;c;z)] = a z^{a-1} 2F1(a+1,b;c;z)
    Complex a{1.3, 0.0}, b{0.7, 0.0}, c{2.4, 0.0};
    for (double z : {0.2, 0.5, -0.5}) {
        double h = 1e-5;
        auto g = [&](double zz) {
            return std::pow(Complex(zz), a) * specfun::hyp2f1(a, b, c, zz);
        };
        Complex deriv = (g(z + h) - g(z - h)) / (2.0 * h);
        Complex expected = a * std::pow(Complex(z), a - 1.0) * specfun::hyp2f1(a + 1.0, b, c, z);
        CHECK(rel_err(deriv, expected) < 1e-6);
    }
}

TEST_CASE("hyp2f1: domain and pole guards") {
    CHECK_THROWS_AS(specfun::hyp2f1(0.5, 0.5, 1.0, 0.9995), DomainError);
    CHECK_THROWS_AS(specfun::hyp2f1(0.5, 0.5, 1.0, 1.5), DomainError);
    CHECK_THROWS_AS(specfun::hyp2f1(0.5, 0.5, -2.0, 0.5), PoleError);
    CHECK_THROWS_AS(specfun::hyp2f1(0.5, 0.5, 1.0, std::nan("")), DomainError);
}

TEST_CASE("hyp2f1: terminating polynomial") {
    // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
    Complex b{1.4, 0.0}, c{2.2, 0.0};
    for (double z : {0.7, -3.0, -400.0}) {
        Complex expect = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        CHECK(rel_err(specfun::hyp2f1(-2.0, b, c, z), expect) < 1e-13);
    }
}
