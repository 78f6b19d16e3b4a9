#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "appell/special.hpp"

using namespace appell;

namespace {

double rel_diff(double a, double b) {
    return std::fabs(a - b) /
           std::max({std::fabs(a), std::fabs(b), 1e-300});
}

template <typename Fn>
ErrorKind error_kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    throw std::runtime_error("expected the call to throw appell::Error");
}

const double pi = 3.14159265358979323846;

}  // namespace

TEST_CASE("gamma function at reference points") {
    CHECK(rel_diff(gamma_fn(0.5), std::sqrt(pi)) < 1e-14);
    CHECK(rel_diff(gamma_fn(5.0), 24.0) < 1e-14);
    CHECK(rel_diff(gamma_fn(1.0), 1.0) < 1e-15);
    // Gamma(-1.5) = Gamma(0.5) / ((-1.5)(-0.5)) = 4 sqrt(pi) / 3.
    CHECK(rel_diff(gamma_fn(-1.5), 4.0 * std::sqrt(pi) / 3.0) < 1e-13);
}

TEST_CASE("log gamma carries the sign of Gamma") {
    CHECK(ln_gamma(3.7).sign == 1);
    CHECK(ln_gamma(-1.5).sign == 1);
    CHECK(ln_gamma(-0.5).sign == -1);
    CHECK(ln_gamma(-2.5).sign == -1);
    // Recurrence ln Gamma(x+1) = ln Gamma(x) + ln x far beyond the overflow
    // range of Gamma itself.
    double lhs = ln_gamma(301.0).log_abs;
    double rhs = ln_gamma(300.0).log_abs + std::log(300.0);
    CHECK(rel_diff(lhs, rhs) < 1e-14);
    CHECK(rel_diff(ln_gamma(0.5).log_abs, 0.5 * std::log(pi)) < 1e-13);
}

TEST_CASE("gamma poles raise parameter errors") {
    CHECK(error_kind_of([] { gamma_fn(0.0); }) == ErrorKind::parameter);
    CHECK(error_kind_of([] { gamma_fn(-3.0); }) == ErrorKind::parameter);
    CHECK(error_kind_of([] { ln_gamma(-7.0); }) == ErrorKind::parameter);
}

TEST_CASE("integer pattern matching") {
    CHECK(is_nonpositive_integer(0.0));
    CHECK(is_nonpositive_integer(-4.0));
    CHECK(is_nonpositive_integer(-4.0 + 1e-12));
    CHECK_FALSE(is_nonpositive_integer(-4.5));
    CHECK_FALSE(is_nonpositive_integer(2.0));
    CHECK(is_integer(6.0));
    CHECK_FALSE(is_integer(6.5));
}

TEST_CASE("pochhammer products") {
    CHECK(pochhammer(3.0, 4) == 360.0);
    CHECK(pochhammer(2.7, 0) == 1.0);
    CHECK(pochhammer(-3.0, 5) == 0.0);
    CHECK(pochhammer(-3.0, 3) == -6.0);
    CHECK(rel_diff(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5) < 1e-15);
}

TEST_CASE("log pochhammer for large order") {
    LnGamma r = ln_pochhammer(1.5, 200);
    CHECK(r.sign == 1);
    double expected = std::lgamma(201.5) - std::lgamma(1.5);
    CHECK(rel_diff(r.log_abs, expected) < 1e-13);

    // Negative non-integer start: (-2.3)(-1.3)(-0.3) = -0.897.
    LnGamma s = ln_pochhammer(-2.3, 3);
    CHECK(s.sign == -1);
    CHECK(rel_diff(std::exp(s.log_abs), 0.897) < 1e-13);

    CHECK(error_kind_of([] { ln_pochhammer(-3.0, 5); }) ==
          ErrorKind::parameter);
}

TEST_CASE("real power with negative bases") {
    CHECK(real_pow(-2.0, 3.0) == -8.0);
    CHECK(real_pow(-2.0, -2.0) == 0.25);
    CHECK(real_pow(0.0, 0.0) == 1.0);
    CHECK(rel_diff(real_pow(2.5, 1.5), std::pow(2.5, 1.5)) < 1e-15);
    CHECK(error_kind_of([] { real_pow(-1.5, 0.5); }) == ErrorKind::singular);
    CHECK(error_kind_of([] { real_pow(0.0, -1.0); }) == ErrorKind::singular);
}

TEST_CASE("pfq reproduces elementary closed forms") {
    // 0F0 is the exponential.
    CHECK(rel_diff(pfq({{}, {}, 0.8}).value, std::exp(0.8)) < 1e-13);
    // 0F1(; 1/2; z^2/4) = cosh z.
    double z = 1.3;
    CHECK(rel_diff(pfq({{}, {0.5}, z * z / 4.0}).value, std::cosh(z)) < 1e-13);
    // 2F1(1, 1; 2; x) = -log(1-x)/x.
    CHECK(rel_diff(pfq({{1.0, 1.0}, {2.0}, 0.6}).value,
                   -std::log1p(-0.6) / 0.6) < 1e-12);
    // Matching upper and lower parameters cancel.
    CHECK(rel_diff(pfq({{1.7}, {1.7}, 0.9}).value, std::exp(0.9)) < 1e-13);
}

TEST_CASE("pfq Gauss value on the negative axis") {
    EvaluationResult r = pfq({{0.5, 1.5}, {2.5}, -0.7});
    CHECK(rel_diff(r.value, 0.8447658818688253026070805) < 5e-13);
    CHECK(r.terms_used > 0);
    CHECK(std::isfinite(r.abs_error_estimate));
}

TEST_CASE("pfq terminates before a lower-parameter pole") {
    // Upper -2 cuts the series at n = 2, before (-5)_n vanishes at n = 6:
    // 1 + 0.4 + 0.1.
    EvaluationResult r = pfq({{-2.0, 1.0}, {-5.0}, 1.0});
    CHECK(rel_diff(r.value, 1.5) < 1e-15);
}

TEST_CASE("pfq rejects divergent configurations") {
    CHECK(error_kind_of([] { pfq({{1.0, 1.0, 1.0}, {2.0}, 0.5}); }) ==
          ErrorKind::divergence);
    CHECK(error_kind_of([] { pfq({{0.5, 1.5}, {2.5}, 1.2}); }) ==
          ErrorKind::divergence);
    CHECK(error_kind_of([] { pfq({{1.3}, {-2.0}, 0.5}); }) ==
          ErrorKind::parameter);
}

TEST_CASE("confluent 1F1 on the negative axis") {
    // Strongly cancelling arguments go through the reflection into a
    // positive-axis series.
    CHECK(rel_diff(hyp1f1(1.2, 2.3, -40.0).value,
                   0.01461544360285991928141566) < 1e-12);
    CHECK(rel_diff(hyp1f1(0.5, 1.5, -25.0).value,
                   0.1772453850902790950764921) < 1e-12);
}

TEST_CASE("confluent 1F1 elementary cases") {
    CHECK(rel_diff(hyp1f1(2.2, 2.2, 3.1).value, std::exp(3.1)) < 1e-13);

    // Terminating: compare against the explicit polynomial.
    double direct = 0.0;
    for (unsigned n = 0; n <= 3; ++n) {
        double num = pochhammer(-3.0, n);
        double den = pochhammer(1.5, n) * std::tgamma(n + 1.0);
        direct += num / den * std::pow(2.7, n);
    }
    CHECK(rel_diff(hyp1f1(-3.0, 1.5, 2.7).value, direct) < 1e-13);

    // Reflection identity 1F1(a;b;x) = e^x 1F1(b-a;b;-x).
    double lhs = hyp1f1(0.8, 2.6, 7.0).value;
    double rhs = std::exp(7.0) * hyp1f1(1.8, 2.6, -7.0).value;
    CHECK(rel_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("Gauss 2F1 on both sides of the origin") {
    CHECK(rel_diff(hyp2f1(0.5, 1.5, 2.5, -0.7).value,
                   0.8447658818688253026070805) < 5e-13);
    CHECK(rel_diff(hyp2f1(1.0, 1.0, 2.0, 0.6).value,
                   -std::log1p(-0.6) / 0.6) < 1e-12);

    // The reflection into (0,1) must agree with the directly transformed
    // series.
    double lhs = hyp2f1(0.5, 1.9, 2.2, -0.8).value;
    double rhs = std::pow(1.8, -0.5) *
                 hyp2f1(0.5, 2.2 - 1.9, 2.2, 0.8 / 1.8).value;
    CHECK(rel_diff(lhs, rhs) < 1e-11);
}

TEST_CASE("Gauss 2F1 at unit argument") {
    // 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).
    double expected = gamma_fn(2.0) * gamma_fn(1.3) /
                      (gamma_fn(1.7) * gamma_fn(1.6));
    CHECK(rel_diff(hyp2f1(0.3, 0.4, 2.0, 1.0).value, expected) < 1e-12);
    // c - a - b <= 0 has no finite value at x = 1.
    CHECK(error_kind_of([] { hyp2f1(1.2, 0.9, 2.0, 1.0); }) ==
          ErrorKind::divergence);
}

TEST_CASE("Gauss 2F1 terminating beyond the unit disc") {
    // (-3)_n sum at x = 3: 1 - 4.5 + 8.1 - 5.4 = -0.8.
    CHECK(rel_diff(hyp2f1(-3.0, 2.0, 4.0, 3.0).value, -0.8) < 1e-13);
    CHECK(error_kind_of([] { hyp2f1(0.5, 1.5, 2.5, 1.7); }) ==
          ErrorKind::divergence);
}
