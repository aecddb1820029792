#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gaplab/quadrature.hpp"
#include "gaplab/weights.hpp"

using namespace gaplab;

namespace {

// Quadrature oracle for moments: panelled Gauss-Legendre at doubled precision,
// independent of the forward recurrence under test.
Real moment_by_quadrature(const WeightSpec& w, double a, double b, int j, int digits) {
  const int wd = 2 * digits;
  auto f = [&](const Real& x) { return pow(x, static_cast<long>(j)) * weight_at(w, x, wd); };
  Real mid((a + b) / 2, wd);
  return integrate_gl(f, Real(a, wd), mid, 96, wd) + integrate_gl(f, mid, Real(b, wd), 96, wd);
}

}  // namespace

TEST_CASE("weight_at anchors") {
  CHECK(weight_at(WeightSpec::gaussian(), Real(0L, 60), 60) == 1L);
  Real e1 = exp(Real(-1L, 60));
  CHECK(abs(weight_at(WeightSpec::laguerre(2.0), Real(1L, 60), 50) - e1) < pow10(-48));
  Real e4 = exp(Real(-4L, 60));
  CHECK(abs(weight_at(WeightSpec::gaussian(), Real(2L, 60), 50) - e4) < pow10(-48));
  CHECK(weight_at(WeightSpec::gaussian(), Real(2L, 60), 50) > 0);
}

TEST_CASE("weight_at rejects points outside the support") {
  CHECK_THROWS_AS(weight_at(WeightSpec::laguerre(1.0), Real(-0.5, 60), 60), std::domain_error);
  CHECK_THROWS_AS(weight_at(WeightSpec::laguerre(1.0), Real(0L, 60), 60), std::domain_error);
}

TEST_CASE("Window validation") {
  auto lag = WeightSpec::laguerre(1.0);
  CHECK_THROWS_AS(Window::of(2.0, 1.0).validate(WeightSpec::gaussian()), std::invalid_argument);
  CHECK_THROWS_AS(Window::of(-0.5, 3.0).validate(lag), std::invalid_argument);
  CHECK_THROWS_AS(Window::of(0.0, 3.0).validate(lag), std::invalid_argument);
  CHECK_NOTHROW(Window::of(0.5, 3.0).validate(lag));
  CHECK_NOTHROW(Window::whole_support().validate(lag));
}

TEST_CASE("moment anchors") {
  auto gue = WeightSpec::gaussian();
  // whole line: mu_0 = sqrt(pi)
  CHECK(abs(moment(gue, Window::whole_support(), 0, 60) - sqrt(pi(60))) < pow10(-58));
  // (0, inf): mu_1 = 1/2 by the antiderivative -e^{-x^2}/2
  CHECK(abs(moment(gue, Window::upper_tail(Real(0L, 60)), 1, 60) - 0.5) < pow10(-58));
  // Laguerre alpha=1 whole half-line: mu_0 = Gamma(2) = 1
  CHECK(abs(moment(WeightSpec::laguerre(1.0), Window::whole_support(), 0, 60) - 1) < pow10(-58));
  // Gaussian (-1,2), j=4, frozen from the quadrature oracle at 80 digits.
  Real frozen = Real::parse(
      "0.6610938273287956354153575243297773654611333079270465334109063207062218536209355", 90);
  CHECK(abs(moment(gue, Window::of(-1.0, 2.0), 4, 75) - frozen) < pow10(-73));
  CHECK(abs(moment_by_quadrature(gue, -1.0, 2.0, 4, 60) - frozen) < pow10(-55));
}

TEST_CASE("moment_vector parity on symmetric Gaussian windows") {
  auto mu = moment_vector(WeightSpec::gaussian(), Window::of(-1.7, 1.7), 9, 60);
  for (int j = 1; j <= 9; j += 2) CHECK(abs(mu[j]) < pow10(-55));
  for (int j = 0; j <= 8; j += 2) CHECK(mu[j] > 0);
}

TEST_CASE("moment_vector matches quadrature on (-1,2)") {
  auto gue = WeightSpec::gaussian();
  auto mu = moment_vector(gue, Window::of(-1.0, 2.0), 6, 60);
  for (int j = 0; j <= 6; ++j) {
    Real q = moment_by_quadrature(gue, -1.0, 2.0, j, 60);
    CHECK(abs(mu[j] - q) < pow10(-55) * max(Real(1L, 20), abs(q)));
  }
}

TEST_CASE("Laguerre whole half-line moments are Gamma values") {
  auto mu = moment_vector(WeightSpec::laguerre(1.0), Window::whole_support(), 3, 60);
  long expect[4] = {1, 2, 6, 24};  // Gamma(2..5)
  for (int j = 0; j <= 3; ++j) CHECK(abs(mu[j] - expect[j]) < pow10(-56));
}

TEST_CASE("moments: recurrence vs quadrature on random windows") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(-2.5, 0.0), uw(0.8, 3.0);
  auto gue = WeightSpec::gaussian();
  for (int t = 0; t < 10; ++t) {
    double a = ua(rng), b = a + uw(rng);
    auto mu = moment_vector(gue, Window::of(a, b), 12, 50);
    for (int j = 0; j <= 12; j += 3) {
      Real q = moment_by_quadrature(gue, a, b, j, 50);
      CHECK(abs(mu[j] - q) < pow10(-25) * max(Real(1L, 20), abs(q)));
    }
  }
  std::uniform_real_distribution<double> la(0.1, 1.0), lw(1.0, 5.0);
  auto lue = WeightSpec::laguerre(1.5);
  for (int t = 0; t < 10; ++t) {
    double a = la(rng), b = a + lw(rng);
    auto mu = moment_vector(lue, Window::of(a, b), 12, 50);
    for (int j = 0; j <= 12; j += 3) {
      Real q = moment_by_quadrature(lue, a, b, j, 50);
      CHECK(abs(mu[j] - q) < pow10(-25) * max(Real(1L, 20), abs(q)));
    }
  }
}

TEST_CASE("window monotonicity of the mass") {
  auto gue = WeightSpec::gaussian();
  Real m1 = moment(gue, Window::of(-1.0, 1.0), 0, 50);
  Real m2 = moment(gue, Window::of(-1.5, 1.2), 0, 50);
  Real m3 = moment(gue, Window::of(-2.5, 2.5), 0, 50);
  CHECK(m1 < m2);
  CHECK(m2 < m3);
}

TEST_CASE("large windows converge to whole-interval moments") {
  auto gue = WeightSpec::gaussian();
  auto big = moment_vector(gue, Window::of(-20.0, 20.0), 8, 60);
  auto full = moment_vector(gue, Window::whole_support(), 8, 60);
  for (int j = 0; j <= 8; j += 2)
    CHECK(abs(big[j] - full[j]) < pow10(-40) * full[j]);
}

TEST_CASE("whole-interval norms") {
  auto gue = WeightSpec::gaussian();
  CHECK(abs(whole_interval_norm(gue, 0, 60) - sqrt(pi(60))) < pow10(-57));
  CHECK(abs(whole_interval_norm(gue, 3, 60) - sqrt(pi(60)) * 3 / 4) < pow10(-56));
  CHECK(abs(whole_interval_norm(WeightSpec::laguerre(1.0), 2, 60) - 12) < pow10(-56));
}
