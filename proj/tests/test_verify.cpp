#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "harmonic/format.hpp"
#include "harmonic/report_io.hpp"
#include "harmonic/verify.hpp"

using namespace harmonic;
using namespace harmonic::verify;
using Complex = std::complex<double>;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("lemma31: closed-form instances") {
    auto ln2 = check_lemma31(1.0, 1.0, 2.0, 1.0, 2.0, 1e-9);
    CHECK(ln2.status == Status::pass);
    CHECK(std::abs(ln2.lhs - Complex{std::log(2.0), 0.0}) < 1e-12);
    CHECK(std::abs(ln2.rhs - Complex{std::log(2.0), 0.0}) < 1e-10);

    auto unit = check_lemma31(2.0, 1.0, 2.0, 1.0, 2.0, 1e-9);
    CHECK(unit.status == Status::pass);
    CHECK(std::abs(unit.lhs - Complex{1.0, 0.0}) < 1e-12);

    auto generic = check_lemma31(1.0, 1.0, 2.0, 0.5, 3.0, 1e-7);
    CHECK(generic.status == Status::pass);
}

TEST_CASE("lemma31: precondition violations are skips") {
    auto rep = check_lemma31(1.0, -0.5, 2.0, 1.0, 2.0, 1e-7);
    CHECK(rep.status == Status::skipped);
    CHECK(rep.parameters.at("skip_reason").find("Re b") != std::string::npos);
    CHECK(check_lemma31(1.0, 1.0, 2.0, 1.0, 0.5, 1e-7).status == Status::skipped);
}

TEST_CASE("lemma32: corrected exponent passes, printed one is recorded failing") {
    auto rep = check_lemma32(1.0, 1.0, 2.0, 1.0, 2.0, 1e-9);
    CHECK(rep.status == Status::pass);
    CHECK(std::abs(rep.lhs - Complex{std::log(2.0), 0.0}) < 1e-12);
    double printed = fmt::parse_double(rep.parameters.at("printed_exponent_rel_err"));
    CHECK(printed == doctest::Approx(3.0).epsilon(1e-6));

    CHECK(check_lemma32(1.0, 2.0, 3.0, 1.0, 2.0, 1e-7).status == Status::pass);
    // boundary nu -> c violates Re c > Re nu
    CHECK(check_lemma32(1.0, 1.0, 2.0, 2.0, 2.0, 1e-7).status == Status::skipped);
}

TEST_CASE("key lemma: closed instance 4 - 2 sqrt(2)") {
    auto rep = check_key_lemma(1.5, 1.0, 2.0, 0.5, 0.5, 2.0, 1e-9);
    CHECK(rep.status == Status::pass);
    CHECK(std::abs(rep.lhs - Complex{4.0 - 2.0 * std::sqrt(2.0), 0.0}) < 1e-12);
    CHECK(std::abs(rep.rhs - Complex{4.0 - 2.0 * std::sqrt(2.0), 0.0}) < 1e-10);
}

TEST_CASE("key lemma: elliptic-kernel instance and degenerate nu = 0") {
    CHECK(check_key_lemma(1.0, 1.0, 2.0, 0.5, 0.5, 3.0, 1e-6).status == Status::pass);
    CHECK(check_key_lemma(1.2, 0.8, 2.1, 0.6, 0.0, 2.0, 1e-6).status == Status::pass);
    CHECK(check_key_lemma(1.0, 1.0, 2.0, 0.5, -0.5, 2.0, 1e-6).status == Status::skipped);
}

TEST_CASE("key lemma: tilde variant and kernel relation") {
    auto rep = check_key_lemma(1.5, 1.0, 2.0, 0.5, 0.5, 2.0, 1e-9, KeyLemmaVariant::tilde);
    CHECK(rep.status == Status::pass);
    // x^{nu-a} 2F1 = 2^{-1} * 4(sqrt2-1)
    CHECK(std::abs(rep.lhs - Complex{2.0 * (std::sqrt(2.0) - 1.0), 0.0}) < 1e-12);
    double kernel_rel = fmt::parse_double(rep.parameters.at("kernel_relation_max_err"));
    CHECK(kernel_rel < 1e-12);

    CHECK(check_key_lemma(1.0, 1.0, 2.0, 0.5, 0.5, 3.0, 1e-6, KeyLemmaVariant::tilde).status ==
          Status::pass);
    CHECK(check_key_lemma(0.9, 1.1, 1.7, 0.5, 0.0, 2.5, 1e-6, KeyLemmaVariant::tilde).status ==
          Status::pass);
}

TEST_CASE("quadratic transform: odd, even, and n = 1") {
    CHECK(check_quadratic_transform(3, Complex{2.0, 1.0}, 1.0, 1e-9).status == Status::pass);
    CHECK(check_quadratic_transform(4, Complex{1.5, 0.0}, 0.5, 1e-8).status == Status::pass);
    auto n1 = check_quadratic_transform(1, Complex{1.0, 0.0}, 1.0, 1e-10);
    CHECK(n1.status == Status::pass);
    CHECK(std::abs(n1.lhs - (-std::exp(Complex{0.0, 1.0}) / Complex{0.0, 2.0})) < 1e-12);
}

TEST_CASE("recurrence: symbolic and finite-difference paths") {
    auto sym = check_recurrence(3, Complex{1.0, 0.0}, 1.0, 1e-10);
    CHECK(sym.status == Status::pass);
    CHECK(sym.parameters.at("path") == "symbolic");

    auto fd = check_recurrence(2, Complex{1.5, 0.0}, 0.8, 1e-4);
    CHECK(fd.status == Status::pass);
    CHECK(fd.parameters.at("path") == "fd");

    // R1 -> R3 by hand: -1/(2 pi sinh r) d/dr (-e^{i l r}/(2 i l)) = e^{i l r}/(4 pi sinh r)
    auto n1 = check_recurrence(1, Complex{1.0, 0.0}, 1.0, 1e-10);
    CHECK(n1.status == Status::pass);
    Complex expect = std::exp(Complex{0.0, 1.0}) / (4.0 * kPi * std::sinh(1.0));
    CHECK(std::abs(n1.rhs - expect) < 1e-12);
}

TEST_CASE("transform: examples from three space families") {
    auto a = check_transform(kernels::SpaceDescriptor(3, 1), Complex{2.0, 0.5}, 1.0, 1e-6);
    CHECK(a.status == Status::pass);
    Complex ratio = fmt::parse_complex(a.parameters.at("ratio"));
    CHECK(std::abs(ratio - Complex{1.0, 0.0}) < 1e-6);

    CHECK(check_transform(kernels::SpaceDescriptor(15, 7), Complex{1.0, 0.0}, 0.5, 1e-5).status ==
          Status::pass);
    CHECK(check_transform(kernels::SpaceDescriptor(5, 1), Complex{0.0, 3.0}, 2.0, 1e-6).status ==
          Status::pass);
    CHECK(check_transform(kernels::SpaceDescriptor(4, 0), Complex{1.0, 0.0}, 1.0, 1e-6).status ==
          Status::skipped);
}

TEST_CASE("bundle transform: tau = 2 beta matches, generic tau is a recorded finding") {
    auto exact = check_bundle_transform(kernels::SpaceDescriptor(7, 3), 2.0, Complex{1.5, 0.0}, 1.0,
                                        1e-6, kernels::BundleConstant::gamma_matched);
    CHECK(exact.status == Status::pass);

    auto finding = check_bundle_transform(kernels::SpaceDescriptor(3, 1), 1.0, Complex{0.0, 2.0},
                                          1.0, 1e-6, kernels::BundleConstant::gamma_matched);
    CHECK(finding.status == Status::fail);
    Complex ratio = fmt::parse_complex(finding.parameters.at("ratio"));
    // beta = 0, tau = 1: the fitted constant is pi^{-1/2}
    CHECK(std::abs(ratio - Complex{1.0 / std::sqrt(kPi), 0.0}) < 1e-6);

    CHECK(check_bundle_transform(kernels::SpaceDescriptor(3, 1), 0.0, Complex{0.0, 2.0}, 1.0, 1e-6)
              .status == Status::skipped);
}

TEST_CASE("report invariants: status consistent with errors") {
    SuiteConfig cfg;
    cfg.checks.push_back({"quadratic-transform", {{"n", "3"}, {"lambda", "1.5"}, {"r", "1"}}, 1e-8});
    cfg.checks.push_back({"lemma31",
                          {{"a", "1"}, {"b", "1"}, {"c", "2"}, {"mu", "0.5"}, {"x", "3"}},
                          1e-7});
    cfg.checks.push_back({"transform",
                          {{"dim-n", "3"}, {"dim-z", "1"}, {"lambda", "1"}, {"r", "1"}},
                          1e-6});
    for (const auto& rep : run_suite(cfg)) {
        REQUIRE(rep.status != Status::skipped);
        double rel = std::abs(rep.lhs - rep.rhs) /
                     std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-300});
        CHECK(rep.rel_err == doctest::Approx(rel));
        double err = (std::abs(rep.lhs) < 1e-12) ? rep.abs_err : rep.rel_err;
        CHECK((rep.status == Status::pass) == (err <= rep.tolerance));
        // scaling sanity: widening the tolerance never flips pass to fail
        CHECK((err <= rep.tolerance * 10.0 || rep.status == Status::fail));
    }
}

TEST_CASE("run_suite: determinism and ordering") {
    SuiteConfig cfg;
    cfg.checks.push_back({"recurrence", {{"n", "3"}, {"lambda", "1.5"}, {"r", "1"}}, 1e-10});
    cfg.checks.push_back({"lemma31",
                          {{"a", "1"}, {"b", "1"}, {"c", "2"}, {"mu", "1"}, {"x", "2"}},
                          1e-9});
    cfg.checks.push_back({"recurrence", {{"n", "2"}, {"lambda", "1.5"}, {"r", "1"}}, 1e-4});

    auto first = run_suite(cfg);
    auto second = run_suite(cfg);
    REQUIRE(first.size() == 3);
    CHECK(first[0].identity_name == "lemma31");  // sorted by (identity, params)
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].identity_name == second[i].identity_name);
        CHECK(first[i].lhs == second[i].lhs);  // bitwise
        CHECK(first[i].rhs == second[i].rhs);
        CHECK(first[i].rel_err == second[i].rel_err);
        CHECK(first[i].parameters == second[i].parameters);
    }
}

TEST_CASE("run_suite: empty and cardinality") {
    CHECK(run_suite(SuiteConfig{}).empty());
    SuiteConfig three;
    for (double x : {2.0, 3.0, 4.0})
        three.checks.push_back({"lemma31",
                                {{"a", "1"}, {"b", "1"}, {"c", "2"}, {"mu", "0.5"},
                                 {"x", fmt::format_double(x)}},
                                1e-6});
    CHECK(run_suite(three).size() == 3);
}

TEST_CASE("transform ratio is independent of lambda") {
    kernels::SpaceDescriptor X(7, 3);
    std::vector<Complex> ratios;
    for (Complex lam : {Complex{1.0, 0.0}, Complex{1.5, 0.0}, Complex{2.0, 0.5}, Complex{0.3, 1.0},
                        Complex{0.0, 3.0}}) {
        auto rep = check_transform(X, lam, 1.0, 1e-6);
        REQUIRE(rep.status == Status::pass);
        ratios.push_back(fmt::parse_complex(rep.parameters.at("ratio")));
    }
    for (const auto& a : ratios)
        for (const auto& b : ratios) CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("run_check: unknown identity and malformed params") {
    CHECK_THROWS_AS(run_check({"no-such-identity", {}, 1e-6}), UsageError);
    CHECK_THROWS_AS(run_check({"lemma31", {{"a", "1"}}, 1e-6}), UsageError);
    // numerical/spec violations inside the check become skips, not throws
    auto rep = run_check({"transform",
                          {{"dim-n", "3"}, {"dim-z", "1"}, {"lambda", "1-2i"}, {"r", "1"}},
                          1e-6});
    CHECK(rep.status == Status::skipped);
}
