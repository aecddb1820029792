#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gaplab/gap.hpp"

using namespace gaplab;

namespace {

Real rel_dev(const Real& a, const Real& b) {
  return abs(a - b) / max(Real(1L, 20), max(abs(a), abs(b)));
}

// Directional derivative (d_a + d_b) F by a central step along the diagonal.
Real diag_fd(const std::function<Real(const Real&, const Real&)>& F, const Real& a, const Real& b,
             const Real& h) {
  return (F(a + h, b + h) - F(a - h, b - h)) / (2 * h);
}

}  // namespace

TEST_CASE("log Hankel determinant anchors") {
  auto gue = WeightSpec::gaussian();
  auto win = Window::of(-1.0, 1.0);
  auto sys = build_from_moments(gue, win, 3, 60);
  CHECK(abs(log_hankel_det(sys, 1) - log(moment(gue, win, 0, 60))) < pow10(-50));

  auto mu = moment_vector(gue, win, 2, 60);
  Real det2 = mu[0] * mu[2] - mu[1] * mu[1];
  CHECK(abs(log_hankel_det(sys, 2) - log(det2)) < pow10(-50));

  auto whole = build_from_moments(gue, Window::whole_support(), 3, 60);
  Real classical(0L, 60);
  for (int j = 0; j < 3; ++j) classical += log(whole_interval_norm(gue, j, 60));
  CHECK(abs(log_hankel_det(whole, 3) - classical) < pow10(-50));
}

TEST_CASE("gap probability anchors") {
  auto gue = WeightSpec::gaussian();
  auto sys = build_from_moments(gue, Window::of(-1.0, 1.0), 1, 60);
  CHECK(abs(gap_probability(sys, 1) - erf(Real(1L, 60), 60)) < pow10(-50));

  auto whole = build_from_moments(gue, Window::whole_support(), 3, 60);
  CHECK(abs(gap_probability(whole, 3) - 1) < pow10(-50));

  auto narrow = build_from_moments(gue, Window::of(-1.0, 1.0), 3, 60);
  auto wide = build_from_moments(gue, Window::of(-2.0, 2.0), 3, 60);
  CHECK(gap_probability(narrow, 3) < gap_probability(wide, 3));
  CHECK(gap_probability(narrow, 3) > 0);
  CHECK(gap_probability(wide, 3) <= 1);
}

TEST_CASE("H vanishes by parity on symmetric Gaussian windows") {
  auto sys = build_from_moments(WeightSpec::gaussian(), Window::of(-1.4, 1.4), 4, 60);
  for (int n = 1; n <= 4; ++n) CHECK(abs(H_of(sys, n)) < pow10(-45));
}

TEST_CASE("H vanishes on the whole Laguerre half-line") {
  auto sys = build_from_moments(WeightSpec::laguerre(1.5), Window::whole_support(), 4, 60);
  for (int n = 1; n <= 4; ++n) CHECK(abs(H_of(sys, n)) < pow10(-45));
}

TEST_CASE("H agrees with the diagonal finite difference of logD") {
  auto gue = WeightSpec::gaussian();
  int n = 2;
  auto F = [&](const Real& a, const Real& b) {
    auto sys = build_from_moments(gue, Window{Bound::at(a), Bound::at(b)}, n, 80);
    return log_hankel_det(sys, n);
  };
  Real a(-1L, 90), b(2L, 90), h = pow10(-12, 90);
  Real fd1 = diag_fd(F, a, b, h);
  Real fd2 = diag_fd(F, a, b, h / 2);
  Real fd = (4 * fd2 - fd1) / 3;
  auto sys = build_from_moments(gue, Window::of(-1.0, 2.0), n, 80);
  CHECK(abs(fd - H_of(sys, n)) < pow10(-30));
}

TEST_CASE("endpoint derivative of the norms matches the boundary residue") {
  auto gue = WeightSpec::gaussian();
  int k = 2;
  auto lnh = [&](const Real& b) {
    auto sys = build_from_moments(gue, Window{Bound::at(Real(-1L, 90)), Bound::at(b)}, 3, 80);
    return log(sys.h[k]);
  };
  Real b(1.5, 90), h = pow10(-12, 90);
  Real d1 = (lnh(b + h) - lnh(b - h)) / (2 * h);
  Real d2 = (lnh(b + h / 2) - lnh(b - h / 2)) / h;
  Real fd = (4 * d2 - d1) / 3;
  auto sys = build_from_moments(gue, Window::of(-1.0, 1.5), 3, 80);
  auto l = gue_ladder(sys, k);
  CHECK(abs(fd + l.R_b) < pow10(-30));
}

TEST_CASE("ladder representations of H match the p1 route") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ua(-2.2, -0.2), uw(1.0, 3.0);
  std::uniform_int_distribution<int> un(1, 8);
  for (int t = 0; t < 25; ++t) {
    int n = un(rng);
    double a = ua(rng), b = a + uw(rng);
    auto sys = build_from_moments(WeightSpec::gaussian(), Window::of(a, b), n, 60);
    Real href = H_of(sys, n);
    CHECK(rel_dev(gue_h_from_ladder(sys, n), href) < pow10(-30));
    CHECK(rel_dev(gue_h_eliminated(sys, n), href) < pow10(-30));
  }
  std::uniform_real_distribution<double> la(0.1, 0.9), lw(2.0, 6.0);
  for (int t = 0; t < 25; ++t) {
    int n = un(rng);
    double a = la(rng), b = a + lw(rng);
    auto sys = build_from_moments(WeightSpec::laguerre(1.0), Window::of(a, b), n, 60);
    Real href = H_of(sys, n);
    CHECK(rel_dev(lue_h_from_ladder(sys, n), href) < pow10(-30));
    CHECK(rel_dev(lue_h_eliminated(sys, n), href) < pow10(-30));
  }
}

TEST_CASE("reconstruction with an empty path is the identity") {
  auto gue = WeightSpec::gaussian();
  Real lp = reconstruct_logprob(2, gue, Real(0L, 60), Real(1.5, 60), 16, 60);
  auto sys = build_from_moments(gue, Window::of(0.0, 1.5), 2, 60);
  CHECK(abs(lp - log_gap_probability(sys, 2)) < pow10(-40));
}

TEST_CASE("reconstruction matches the direct probability on both path signs") {
  auto gue = WeightSpec::gaussian();
  {
    Real lp = reconstruct_logprob(2, gue, Real(-0.5, 60), Real(1L, 60), 32, 60);
    auto sys = build_from_moments(gue, Window::of(-0.5, 1.0), 2, 60);
    CHECK(abs(lp - log_gap_probability(sys, 2)) < pow10(-20));
  }
  {
    Real lp = reconstruct_logprob(3, gue, Real(0.4, 60), Real(2.1, 60), 32, 60);
    auto sys = build_from_moments(gue, Window::of(0.4, 2.1), 3, 60);
    CHECK(abs(lp - log_gap_probability(sys, 3)) < pow10(-20));
  }
}

TEST_CASE("reconstruction rejects bad input") {
  CHECK_THROWS_AS(reconstruct_logprob(2, WeightSpec::laguerre(1.0), Real(0.5, 60), Real(3L, 60), 32, 60),
                  std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_logprob(2, WeightSpec::gaussian(), Real(-0.5, 60), Real(1L, 60), 8, 60),
                  std::invalid_argument);
}

TEST_CASE("surface symmetry, determinism and invariants") {
  auto gue = WeightSpec::gaussian();
  std::vector<Real> ag = {Real(-1.5, 50), Real(-1.0, 50), Real(-0.5, 50)};
  std::vector<Real> bg = {Real(0.5, 50), Real(1.0, 50), Real(1.5, 50)};
  PrecisionPolicy policy;
  policy.digits = 50;
  auto s1 = surface(gue, 2, ag, bg, policy);
  auto s2 = surface(gue, 2, ag, bg, policy);
  // Bit-exact reproducibility at fixed precision.
  CHECK(surface_to_csv(s1).emit() == surface_to_csv(s2).emit());
  // Anti-diagonal nodes are symmetric windows, where H = 0.
  for (int i = 0; i < 3; ++i) CHECK(abs(s1.points[i][2 - i].H) < pow10(-40));
  for (const auto& row : s1.points) {
    for (const auto& p : row) {
      CHECK(p.logProb <= 0);
      CHECK(abs(p.H - 2 * p.p1) < pow10(-45));
    }
  }
}

TEST_CASE("LUE surface grid completes with valid points") {
  auto lue = WeightSpec::laguerre(1.0);
  std::vector<Real> ag, bg;
  for (int i = 0; i < 11; ++i) ag.push_back(Real(0.2 + 0.08 * i, 50));
  for (int j = 0; j < 11; ++j) bg.push_back(Real(4.0 + 0.4 * j, 50));
  PrecisionPolicy policy;
  policy.digits = 50;
  auto s = surface(lue, 4, ag, bg, policy);
  Real al = lue.alpha;
  for (const auto& row : s.points) {
    for (const auto& p : row) {
      CHECK(p.logProb <= 0);
      CHECK(p.logD.is_finite());
      CHECK(abs(p.H - (4 * (al + 4) + p.p1)) < pow10(-40));
    }
  }
}

TEST_CASE("surface grid validation and failure propagation") {
  auto gue = WeightSpec::gaussian();
  std::vector<Real> bad = {Real(1L, 50), Real(0L, 50)};
  std::vector<Real> ok = {Real(2L, 50)};
  PrecisionPolicy policy;
  policy.digits = 50;
  CHECK_THROWS_AS(surface(gue, 2, bad, ok, policy), std::invalid_argument);
  // A grid pair with a >= b fails inside the node build and is reported
  // with its coordinates.
  std::vector<Real> ag = {Real(1L, 50)};
  std::vector<Real> bg = {Real(0.5, 50)};
  CHECK_THROWS_WITH(surface(gue, 2, ag, bg, policy), Catch::Matchers::ContainsSubstring("node"));
}

TEST_CASE("surface CSV and JSON exports") {
  auto gue = WeightSpec::gaussian();
  std::vector<Real> ag = {Real(-1L, 50), Real(-0.5, 50)};
  std::vector<Real> bg = {Real(0.5, 50), Real(1L, 50)};
  PrecisionPolicy policy;
  policy.digits = 50;
  auto s = surface(gue, 2, ag, bg, policy);

  auto csv = surface_to_csv(s);
  CHECK(csv.header == std::vector<std::string>{"a", "b", "logD", "logProb", "H", "p1"});
  CHECK(csv.rows.size() == 4);
  std::string text = csv.emit();
  CHECK(CsvTable::parse(text).emit() == text);

  auto j = surface_to_json(s);
  CHECK(j["ensemble"] == "gaussian");
  CHECK(j["n"] == 2);
  CHECK(j["digits"] == 50);
  CHECK(j["points"].size() == 4);
}

TEST_CASE("Laguerre endpoint derivative of the norms matches the boundary residue") {
  auto lue = WeightSpec::laguerre(1.0);
  int k = 2;
  auto lnh = [&](const Real& b) {
    auto sys = build_from_moments(lue, Window{Bound::at(Real(0.4, 90)), Bound::at(b)}, 3, 80);
    return log(sys.h[k]);
  };
  Real b(4.5, 90), h = pow10(-12, 90);
  Real d1 = (lnh(b + h) - lnh(b - h)) / (2 * h);
  Real d2 = (lnh(b + h / 2) - lnh(b - h / 2)) / h;
  Real fd = (4 * d2 - d1) / 3;
  auto sys = build_from_moments(lue, Window::of(0.4, 4.5), 3, 80);
  auto l = lue_ladder(sys, k);
  CHECK(abs(fd + l.R_b) < pow10(-30));
}
