#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gaplab/special.hpp"

using namespace gaplab;

namespace {

// Independent oracle: alternating Taylor series
// erf(x) = (2/sqrt(pi)) sum_k (-1)^k x^{2k+1} / (k! (2k+1)),
// summed in extended precision until the terms drop below 10^{-digits-5}.
Real erf_taylor(const Real& x, int digits) {
  const int wd = 2 * digits + 20;
  Real xw = x.rounded_to(wd);
  Real x2 = xw * xw;
  Real term = xw;  // k = 0 contribution before the 1/(2k+1) factor
  Real sum = term;
  Real eps = pow10(-digits - 5, 20);
  for (long k = 1; k < 4000; ++k) {
    term = term * x2 / k;
    Real contrib = term / (2 * k + 1);
    sum = (k % 2 == 0) ? sum + contrib : sum - contrib;
    if (abs(term) < eps) break;
  }
  return 2 * sum / sqrt(pi(wd));
}

}  // namespace

TEST_CASE("erf exact anchors") {
  CHECK(erf(Real(0L, 60), 60).is_zero());
  CHECK(erf(Real::pos_inf(), 60) == 1L);
  CHECK(erf(Real::neg_inf(), 60) == Real(-1L, 60));
}

TEST_CASE("erf(1) against series oracle and frozen value") {
  // Frozen from the Taylor oracle at 80 digits.
  Real frozen = Real::parse(
      "0.8427007929497148693412206350826092592960669979663029084599378978347172540960108", 90);
  Real oracle = erf_taylor(Real(1L, 90), 85);
  CHECK(abs(oracle - frozen) < pow10(-78));
  CHECK(abs(erf(Real(1L, 90), 80) - frozen) < pow10(-78));
}

TEST_CASE("erf accuracy over a range, against oracle and mpfr") {
  for (double x : {0.1, 0.5, 2.0, 3.75, 6.0, 11.0}) {
    Real xr(x, 70);
    Real mine = erf(xr, 60);
    CHECK(abs(mine - erf_taylor(xr, 70)) < pow10(-58));
    CHECK(abs(mine - refimpl::erf(xr)) < pow10(-58));
    CHECK(mine <= 1L);
  }
}

TEST_CASE("erf is odd") {
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    Real x(u(rng), 60);
    CHECK(abs(erf(-x, 50) + erf(x, 50)) < pow10(-48));
  }
}

TEST_CASE("lower incomplete gamma anchors") {
  // gamma_lower(1, x) = 1 - e^{-x}
  for (double x : {0.25, 1.0, 3.0, 20.0}) {
    Real xr(x, 70);
    Real expected = 1 - exp(-xr.rounded_to(70));
    CHECK(abs(lower_incomplete_gamma(Real(1L, 70), xr, 60) - expected) < pow10(-57));
  }
  // gamma_lower(s, 0) = 0
  CHECK(lower_incomplete_gamma(Real(2.5, 60), Real(0L, 60), 60).is_zero());
}

TEST_CASE("gamma_lower(2,1) equals 1 - 2/e") {
  Real frozen = Real::parse(
      "0.2642411176571153568089524596770782651083777379364643309843263966050770085102004", 90);
  Real direct = 1 - 2 * exp(Real(-1L, 90));
  CHECK(abs(direct - frozen) < pow10(-78));
  CHECK(abs(lower_incomplete_gamma(Real(2L, 90), Real(1L, 90), 80) - frozen) < pow10(-77));
}

TEST_CASE("gamma_lower consistency with mpfr upper gamma") {
  for (double s : {0.5, 1.7, 4.0}) {
    for (double x : {0.3, 2.0, 9.0}) {
      Real sr(s, 70), xr(x, 70);
      Real total = gamma_fn(sr, 60);
      Real split = lower_incomplete_gamma(sr, xr, 60) + refimpl::upper_gamma(sr, xr);
      CHECK(abs(total - split) < pow10(-55) * total);
    }
  }
}

TEST_CASE("gamma_lower increasing in x and bounded by Gamma(s)") {
  Real s(1.3, 60);
  Real prev(0L, 60);
  Real total = gamma_fn(s, 60);
  for (double x = 0.5; x < 12.0; x += 0.5) {
    Real g = lower_incomplete_gamma(s, Real(x, 60), 60);
    CHECK(g >= prev);
    CHECK(g <= total);
    prev = g;
  }
}

TEST_CASE("gamma_lower rejects bad parameters") {
  CHECK_THROWS_AS(lower_incomplete_gamma(Real(0L, 60), Real(1L, 60), 60), std::invalid_argument);
  CHECK_THROWS_AS(lower_incomplete_gamma(Real(-2L, 60), Real(1L, 60), 60), std::invalid_argument);
  CHECK_THROWS_AS(lower_incomplete_gamma(Real(1L, 60), Real(-1L, 60), 60), std::domain_error);
}

TEST_CASE("doubling digits never changes leading digits") {
  for (double x : {0.8, 2.3}) {
    Real a = erf(Real(x, 200), 60);
    Real b = erf(Real(x, 200), 120);
    CHECK(abs(a - b) < pow10(-58));
    Real ga = lower_incomplete_gamma(Real(1.9, 200), Real(x, 200), 60);
    Real gb = lower_incomplete_gamma(Real(1.9, 200), Real(x, 200), 120);
    CHECK(abs(ga - gb) < pow10(-58) * max(Real(1L, 20), ga));
  }
}

TEST_CASE("required_digits heuristic") {
  CHECK(required_digits(1) == 50);
  CHECK(required_digits(8) == 96);
  CHECK(required_digits(32) == 384);
  CHECK_THROWS_AS(required_digits(0), std::invalid_argument);
}

TEST_CASE("PrecisionPolicy validation") {
  PrecisionPolicy p;
  p.digits = 29;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.digits = 30;
  CHECK_NOTHROW(p.validate());
}
