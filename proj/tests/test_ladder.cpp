#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gaplab/ladder.hpp"

using namespace gaplab;

namespace {

Real worst_residual(const CompatReport& rep) {
  Real worst(0L, 40);
  for (const auto& [name, r] : rep.residuals) worst = max(worst, r);
  return worst;
}

}  // namespace

TEST_CASE("degree-zero boundary quantities") {
  auto sys = build_from_moments(WeightSpec::gaussian(), Window::of(-0.8, 1.4), 3, 60);
  auto l0 = gue_ladder(sys, 0);
  Real a = sys.window.lo.x.rounded_to(70), b = sys.window.hi.x.rounded_to(70);
  Real mu0 = sys.h[0];
  CHECK(abs(l0.R_a - exp(-(a * a)) / mu0) < pow10(-50));
  CHECK(abs(l0.R_b + exp(-(b * b)) / mu0) < pow10(-50));
  CHECK(l0.r_a.is_zero());
  CHECK(l0.r_b.is_zero());
}

TEST_CASE("degree-zero sum rule reduces to the first moment antiderivative") {
  // R_0a + R_0b = 2 alpha_0 is the statement e^{-a^2} - e^{-b^2} = 2 mu_1.
  auto gue = WeightSpec::gaussian();
  auto win = Window::of(-0.8, 1.4);
  auto sys = build_from_moments(gue, win, 3, 60);
  auto l0 = gue_ladder(sys, 0);
  CHECK(abs(l0.R_a + l0.R_b - 2 * sys.alpha[0]) < pow10(-50));
  Real aw = win.lo.x.rounded_to(70), bw = win.hi.x.rounded_to(70);
  Real lhs = exp(-(aw * aw)) - exp(-(bw * bw));
  CHECK(abs(lhs - 2 * moment(gue, win, 1, 60)) < pow10(-55));
}

TEST_CASE("symmetric Gaussian window parity of ladder quantities") {
  auto sys = build_from_moments(WeightSpec::gaussian(), Window::of(-1.1, 1.1), 5, 60);
  for (int n = 1; n <= 4; ++n) {
    auto l = gue_ladder(sys, n);
    CHECK(abs(l.R_a + l.R_b) < pow10(-48));
    CHECK(abs(l.r_a - l.r_b) < pow10(-48));
  }
}

TEST_CASE("ensemble mismatch is rejected") {
  auto gue_sys = build_from_moments(WeightSpec::gaussian(), Window::of(-1.0, 1.0), 3, 60);
  auto lue_sys = build_from_moments(WeightSpec::laguerre(1.0), Window::of(0.3, 4.0), 3, 60);
  CHECK_THROWS_AS(lue_ladder(gue_sys, 1), std::invalid_argument);
  CHECK_THROWS_AS(gue_ladder(lue_sys, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_compat_gue(lue_sys, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_compat_lue(gue_sys, 1), std::invalid_argument);
}

TEST_CASE("Laguerre sum rules hold by construction and against the integral") {
  auto sys = build_from_moments(WeightSpec::laguerre(1.0), Window::of(0.3, 5.0), 5, 60);
  for (int n = 1; n <= 4; ++n) {
    auto l = lue_ladder(sys, n);
    CHECK(abs(l.R + l.R_a + l.R_b - 1) < pow10(-55));
    CHECK(abs(l.r + l.r_a + l.r_b + n) < pow10(-55));
    // Defining integral as an independent oracle for the z = 0 residue.
    Real rn_int = lue_rn_by_integral(sys, n, 256);
    CHECK(abs(rn_int - l.R) < pow10(-20) * max(Real(1L, 20), abs(l.R)));
  }
}

TEST_CASE("Laguerre z=0 residue approaches 1 on a near-full window") {
  Real prev_gap = Real::pos_inf();
  for (double eps : {0.3, 0.05, 0.005}) {
    auto sys = build_from_moments(WeightSpec::laguerre(1.0),
                                  Window::of(eps, 45.0 + 40.0 * eps), 2, 60);
    auto l = lue_ladder(sys, 0);
    Real gap = abs(l.R - 1) + abs(l.R_a) + abs(l.R_b);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < pow10(-2));
}

TEST_CASE("classical whole half-line Laguerre ladder values") {
  Real al(1.5, 60);
  auto sys = build_from_moments(WeightSpec::laguerre(al), Window::whole_support(), 4, 60);
  auto l1 = lue_ladder(sys, 1);
  CHECK(abs(l1.r + 1) < pow10(-50));
  CHECK(abs(l1.R - 1) < pow10(-50));
  // r_1^2 - alpha r_1 = 1 + alpha = beta_1 R_1 R_0
  CHECK(abs(l1.r * l1.r - al * l1.r - (1 + al)) < pow10(-50));
  CHECK(abs(sys.beta[1] - (1 + al)) < pow10(-50));
  // alpha_n = alpha + 2n + 1 once the boundary terms vanish
  for (int n = 0; n <= 3; ++n) CHECK(abs(sys.alpha[n] - (al + 2 * n + 1)) < pow10(-50));
}

TEST_CASE("GUE compatibility report on a generic window") {
  auto sys = build_from_moments(WeightSpec::gaussian(), Window::of(-1.0, 1.5), 4, 60);
  auto rep = verify_compat_gue(sys, 2);
  CHECK(rep.pass);
  CHECK(worst_residual(rep) < rep.tolerance);
  CHECK(rep.residuals.size() >= 26);
}

TEST_CASE("whole-line limit of the beta sum rule") {
  auto sys = build_from_moments(WeightSpec::gaussian(), Window::whole_support(), 3, 60);
  auto l1 = gue_ladder(sys, 1);
  CHECK(l1.r_a.is_zero());
  CHECK(l1.r_b.is_zero());
  CHECK(abs(sys.beta[1] - 0.5) < pow10(-50));
}

TEST_CASE("probe independence of the pointwise conditions") {
  auto sys = build_from_moments(WeightSpec::gaussian(), Window::of(-1.0, 1.5), 4, 60);
  auto rep = verify_compat_gue(sys, 2);
  // The condition holds for every z, so any two probes agree below tolerance.
  CHECK(abs(rep.residuals.at("s1_z0") - rep.residuals.at("s1_z5")) < rep.tolerance);
  CHECK(abs(rep.residuals.at("s2_z1") - rep.residuals.at("s2_z4")) < rep.tolerance);
}

TEST_CASE("LUE compatibility report on a generic window") {
  auto sys = build_from_moments(WeightSpec::laguerre(1.0), Window::of(0.3, 5.0), 4, 80);
  auto rep = verify_compat_lue(sys, 2);
  CHECK(rep.pass);
  CHECK(worst_residual(rep) < rep.tolerance);
  CHECK(rep.residuals.size() == 33);
}

TEST_CASE("weighted window sum requires both partial sums from degree zero") {
  // Dropping the degree-zero b-term (a suspected misprint in one display)
  // breaks the identity by exactly |b R_{0,b}|.
  auto sys = build_from_moments(WeightSpec::laguerre(1.0), Window::of(0.3, 5.0), 4, 80);
  int n = 2;
  const int wd = sys.digits_used;
  Real a = sys.window.lo.x, b = sys.window.hi.x;
  Real al = sys.weight.alpha;
  Real sum_Ra(0L, wd), sum_Rb(0L, wd);
  for (int j = 0; j < n; ++j) {
    auto lj = lue_ladder(sys, j);
    sum_Ra += lj.R_a;
    sum_Rb += lj.R_b;
  }
  auto l = lue_ladder(sys, n);
  Real beta_n = sys.beta[n];
  Real rhs = beta_n * (l.R_a + l.R_b) + (l.r_a * l.r_a / l.R_a) * (1 - l.R_b) +
             (l.r_b * l.r_b / l.R_b) * (1 - l.R_a) + (2 * n + al - a) * l.r_a +
             (2 * n + al - b) * l.r_b + 2 * l.r_a * l.r_b;
  Real resid_full = abs(a * sum_Ra + b * sum_Rb - rhs);
  auto l0 = lue_ladder(sys, 0);
  Real resid_dropped = abs(a * sum_Ra + b * (sum_Rb - l0.R_b) - rhs);
  CHECK(resid_full < pow10(-20));
  CHECK(resid_dropped > abs(b * l0.R_b) / 2);
}

TEST_CASE("sign invariants across random windows") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ua(-2.0, 0.0), uw(0.8, 2.5);
  for (int t = 0; t < 5; ++t) {
    double a = ua(rng), b = a + uw(rng);
    auto sys = build_from_moments(WeightSpec::gaussian(), Window::of(a, b), 5, 60);
    for (int n = 0; n <= 4; ++n) {
      auto l = gue_ladder(sys, n);
      CHECK(l.R_a > 0);
      CHECK(l.R_b < 0);
    }
  }
  std::uniform_real_distribution<double> la(0.1, 1.0), lw(1.5, 5.0);
  for (int t = 0; t < 5; ++t) {
    double a = la(rng), b = a + lw(rng);
    auto sys = build_from_moments(WeightSpec::laguerre(2.0), Window::of(a, b), 5, 60);
    for (int n = 0; n <= 4; ++n) {
      auto l = lue_ladder(sys, n);
      CHECK(l.R_a > 0);
      CHECK(l.R_b < 0);
    }
  }
}

TEST_CASE("residuals scale down as digits increase") {
  auto win = Window::of(-1.0, 1.5);
  auto s40 = build_from_moments(WeightSpec::gaussian(), win, 4, 40);
  auto s80 = build_from_moments(WeightSpec::gaussian(), win, 4, 80);
  Real w40 = worst_residual(verify_compat_gue(s40, 2));
  Real w80 = worst_residual(verify_compat_gue(s80, 2));
  CHECK(w80 < w40 * pow10(-10));
}

TEST_CASE("compat preconditions") {
  auto sys = build_from_moments(WeightSpec::gaussian(), Window::of(-1.0, 1.0), 4, 60);
  CHECK_THROWS_AS(verify_compat_gue(sys, 0), std::out_of_range);
  CHECK_THROWS_AS(verify_compat_gue(sys, 4), std::out_of_range);
  CHECK_NOTHROW(verify_compat_gue(sys, 3));
}
