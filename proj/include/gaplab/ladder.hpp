// Ladder-operator auxiliary quantities and the verification of the
// compatibility-condition identities they satisfy.
//
// For both weights the ladder coefficients A_n, B_n are rational in z with
// poles only at the window endpoints (and at 0 for Laguerre); the residues
// are boundary terms built from the endpoint polynomial values:
//
//   Gaussian:  R_{n,a} =  e^{-a^2} P_n(a)^2 / h_n        (> 0)
//              R_{n,b} = -e^{-b^2} P_n(b)^2 / h_n        (< 0)
//              r_{n,a} =  e^{-a^2} P_n(a) P_{n-1}(a) / h_{n-1}
//              r_{n,b} = -e^{-b^2} P_n(b) P_{n-1}(b) / h_{n-1}
//
//   Laguerre:  as above with weight a^alpha e^{-a}, plus the z = 0 residues
//              R_n, r_n. The sum rules R_n = 1 - R_{n,a} - R_{n,b} and
//              r_n = -n - r_{n,a} - r_{n,b} are the primary route for those;
//              the defining integrals are kept as a quadrature cross-check.
//
// verify_compat_* evaluates every difference identity the two supplementary
// conditions generate, plus the conditions themselves at a fixed set of probe
// points z. Residuals are reported relative to the size of the largest term
// in each identity, so a single tolerance 10^(-digits/3) applies across
// identities whose natural scales differ by many orders of magnitude.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaplab/orthopoly.hpp"

namespace gaplab {

struct GueLadder {
  int n = 0;
  Real R_a, R_b, r_a, r_b;
};

struct LueLadder {
  int n = 0;
  Real R, r, R_a, R_b, r_a, r_b;
};

struct CompatReport {
  int n = 0;
  std::map<std::string, Real> residuals;  // relative to each identity's scale
  Real tolerance;
  bool pass = false;
};

namespace detail {

// |residual| / max(1, largest |term|)
inline Real normalized(const Real& residual, const std::vector<Real>& terms) {
  Real scale(1L, 20);
  for (const auto& t : terms) scale = max(scale, abs(t));
  return abs(residual) / scale;
}

inline Real endpoint_weight(const OPSystem& sys, const Bound& e, int wd) {
  if (!e.finite) return Real(0L, wd);
  return weight_at(sys.weight, e.x, wd);
}

}  // namespace detail

inline GueLadder gue_ladder(const OPSystem& sys, int n) {
  if (!sys.weight.is_gaussian())
    throw std::invalid_argument("gue_ladder: ensemble mismatch (needs Gaussian system)");
  if (n < 0 || n > sys.n_max + 1) throw std::out_of_range("gue_ladder: n out of range");
  const int wd = sys.digits_used;
  GueLadder l;
  l.n = n;
  l.R_a = l.R_b = l.r_a = l.r_b = Real(0L, wd);
  Real wa = detail::endpoint_weight(sys, sys.window.lo, wd);
  Real wb = detail::endpoint_weight(sys, sys.window.hi, wd);
  if (sys.window.lo.finite) {
    l.R_a = wa * sys.pa[n] * sys.pa[n] / sys.h[n];
    if (n >= 1) l.r_a = wa * sys.pa[n] * sys.pa[n - 1] / sys.h[n - 1];
  }
  if (sys.window.hi.finite) {
    l.R_b = -(wb * sys.pb[n] * sys.pb[n] / sys.h[n]);
    if (n >= 1) l.r_b = -(wb * sys.pb[n] * sys.pb[n - 1] / sys.h[n - 1]);
  }
  return l;
}

inline LueLadder lue_ladder(const OPSystem& sys, int n) {
  if (!sys.weight.is_laguerre())
    throw std::invalid_argument("lue_ladder: ensemble mismatch (needs Laguerre system)");
  if (n < 0 || n > sys.n_max + 1) throw std::out_of_range("lue_ladder: n out of range");
  const int wd = sys.digits_used;
  LueLadder l;
  l.n = n;
  l.R_a = l.R_b = l.r_a = l.r_b = Real(0L, wd);
  Real wa = detail::endpoint_weight(sys, sys.window.lo, wd);
  Real wb = detail::endpoint_weight(sys, sys.window.hi, wd);
  if (sys.window.lo.finite) {
    l.R_a = wa * sys.pa[n] * sys.pa[n] / sys.h[n];
    if (n >= 1) l.r_a = wa * sys.pa[n] * sys.pa[n - 1] / sys.h[n - 1];
  }
  if (sys.window.hi.finite) {
    l.R_b = -(wb * sys.pb[n] * sys.pb[n] / sys.h[n]);
    if (n >= 1) l.r_b = -(wb * sys.pb[n] * sys.pb[n - 1] / sys.h[n - 1]);
  }
  l.R = 1 - l.R_a - l.R_b;
  l.r = -Real(n, wd) - l.r_a - l.r_b;
  return l;
}

// Quadrature evaluation of the defining integral for the Laguerre z=0
// residue: (alpha / h_n) * integral of P_n^2 y^{alpha-1} e^{-y} over (a,b).
inline Real lue_rn_by_integral(const OPSystem& sys, int n, int nodes = 192) {
  if (!sys.weight.is_laguerre()) throw std::invalid_argument("lue_rn_by_integral: ensemble mismatch");
  if (!sys.window.lo.finite || !sys.window.hi.finite)
    throw std::invalid_argument("lue_rn_by_integral: finite window required");
  const int wd = sys.digits_used + 10;
  Real al = sys.weight.alpha.rounded_to(wd);
  auto f = [&](const Real& y) {
    Real p = sys.eval_monic(n, y);
    return p * p * exp((al - 1) * log(y) - y);
  };
  Real integral = integrate_gl(f, sys.window.lo.x, sys.window.hi.x, nodes, wd);
  return al * integral / sys.h[n];
}

namespace detail {

// Fixed probe abscissas for the pointwise conditions, clear of the poles
// z in {0, a, b}.
inline std::vector<Real> probe_points(const OPSystem& sys) {
  const int wd = sys.digits_used;
  Real a = sys.window.lo.x.rounded_to(wd);
  Real b = sys.window.hi.x.rounded_to(wd);
  Real mid = (a + b) / 2;
  Real width = b - a;
  Real m = max(abs(a), abs(b));
  std::vector<Real> probes = {a - 1,          b + 1,           mid + width / 4,
                              mid - width / 3, m + 3,          -(m + 3),
                              a - 2.5,         b + 3.5};
  for (auto& z : probes) {
    while (abs(z) < 1e-6 || abs(z - a) < 1e-6 || abs(z - b) < 1e-6) z = z + 0.37;
  }
  return probes;
}

struct GueAB {
  Real A, B;
};

inline GueAB gue_ab_at(const OPSystem& sys, const GueLadder& l, const Real& z) {
  Real a = sys.window.lo.x;
  Real b = sys.window.hi.x;
  GueAB f;
  f.A = 2 + l.R_a / (z - a) + l.R_b / (z - b);
  f.B = l.r_a / (z - a) + l.r_b / (z - b);
  return f;
}

inline GueAB lue_ab_at(const OPSystem& sys, const LueLadder& l, const Real& z) {
  Real a = sys.window.lo.x;
  Real b = sys.window.hi.x;
  GueAB f;
  f.A = l.R / z + l.R_a / (z - a) + l.R_b / (z - b);
  f.B = l.r / z + l.r_a / (z - a) + l.r_b / (z - b);
  return f;
}

}  // namespace detail

inline CompatReport verify_compat_gue(const OPSystem& sys, int n) {
  if (!sys.weight.is_gaussian()) throw std::invalid_argument("verify_compat_gue: ensemble mismatch");
  if (n < 1 || n > sys.n_max - 1) throw std::out_of_range("verify_compat_gue: needs 1 <= n <= n_max-1");
  if (!sys.window.lo.finite || !sys.window.hi.finite)
    throw std::invalid_argument("verify_compat_gue: finite window required");

  const int wd = sys.digits_used;
  Real a = sys.window.lo.x.rounded_to(wd);
  Real b = sys.window.hi.x.rounded_to(wd);
  GueLadder lm = gue_ladder(sys, n - 1);
  GueLadder l = gue_ladder(sys, n);
  GueLadder lp = gue_ladder(sys, n + 1);
  Real alpha_n = sys.alpha[n];
  Real beta_n = sys.beta[n];

  std::vector<GueLadder> all;
  for (int j = 0; j <= n + 1; ++j) all.push_back(gue_ladder(sys, j));
  Real sum_Ra(0L, wd), sum_Rb(0L, wd);
  for (int j = 0; j < n; ++j) {
    sum_Ra += all[j].R_a;
    sum_Rb += all[j].R_b;
  }

  CompatReport rep;
  rep.n = n;
  auto put = [&](const std::string& name, const Real& residual, const std::vector<Real>& terms) {
    rep.residuals.emplace(name, detail::normalized(residual, terms));
  };

  put("alpha_sum_rule", l.R_a + l.R_b - 2 * alpha_n, {l.R_a, l.R_b, 2 * alpha_n});
  put("string_b", lp.r_b + l.r_b - (b - alpha_n) * l.R_b, {lp.r_b, l.r_b, (b - alpha_n) * l.R_b});
  put("string_a", lp.r_a + l.r_a - (a - alpha_n) * l.R_a, {lp.r_a, l.r_a, (a - alpha_n) * l.R_a});
  put("beta_r_sum", beta_n - Real(n, wd) / 2 - l.r_a / 2 - l.r_b / 2,
      {beta_n, Real(n, wd) / 2, l.r_a / 2, l.r_b / 2});
  put("r_square_a", l.r_a * l.r_a - beta_n * l.R_a * lm.R_a,
      {l.r_a * l.r_a, beta_n * l.R_a * lm.R_a});
  put("r_square_b", l.r_b * l.r_b - beta_n * l.R_b * lm.R_b,
      {l.r_b * l.r_b, beta_n * l.R_b * lm.R_b});

  {
    Real lhs = 2 * l.r_b * l.r_a / (b - a) + 2 * b * l.r_b + sum_Rb;
    Real rhs = beta_n * ((l.R_b * lm.R_a + lm.R_b * l.R_a) / (b - a) + 2 * (lm.R_b + l.R_b));
    put("window_sum_b", lhs - rhs, {lhs, rhs});
  }
  {
    Real lhs = 2 * l.r_b * l.r_a / (a - b) + 2 * a * l.r_a + sum_Ra;
    Real rhs = beta_n * ((l.R_a * lm.R_b + lm.R_a * l.R_b) / (a - b) + 2 * (lm.R_a + l.R_a));
    put("window_sum_a", lhs - rhs, {lhs, rhs});
  }
  {
    Real lhs = 2 * b * l.r_b + 2 * a * l.r_a + sum_Ra + sum_Rb;
    Real rhs = 2 * beta_n * (lm.R_b + l.R_b + lm.R_a + l.R_a);
    put("combined_sum", lhs - rhs, {lhs, rhs});
    Real rhs2 = 2 * beta_n * (l.R_a + l.R_b) + 2 * l.r_a * l.r_a / l.R_a + 2 * l.r_b * l.r_b / l.R_b;
    put("combined_sum_reduced", lhs - rhs2, {lhs, rhs2});
  }

  // Pointwise supplementary conditions.
  auto probes = detail::probe_points(sys);
  for (size_t i = 0; i < probes.size(); ++i) {
    const Real& z = probes[i];
    auto fn = detail::gue_ab_at(sys, l, z);
    auto fp = detail::gue_ab_at(sys, lp, z);
    Real s1 = fp.B + fn.B - (z - alpha_n) * fn.A + v_prime(sys.weight, z);
    put("s1_z" + std::to_string(i), s1, {fp.B, fn.B, (z - alpha_n) * fn.A, v_prime(sys.weight, z)});

    auto fm = detail::gue_ab_at(sys, lm, z);
    Real sumA = 2 * Real(n, wd) + sum_Ra / (z - a) + sum_Rb / (z - b);
    Real s2 = fn.B * fn.B + v_prime(sys.weight, z) * fn.B + sumA - beta_n * fn.A * fm.A;
    put("s2_z" + std::to_string(i), s2,
        {fn.B * fn.B, v_prime(sys.weight, z) * fn.B, sumA, beta_n * fn.A * fm.A});
  }

  rep.tolerance = pow10(-sys.digits_used / 3, 20);
  rep.pass = true;
  for (const auto& [name, r] : rep.residuals)
    if (!(r < rep.tolerance)) rep.pass = false;
  return rep;
}

inline CompatReport verify_compat_lue(const OPSystem& sys, int n) {
  if (!sys.weight.is_laguerre()) throw std::invalid_argument("verify_compat_lue: ensemble mismatch");
  if (n < 1 || n > sys.n_max - 1) throw std::out_of_range("verify_compat_lue: needs 1 <= n <= n_max-1");
  if (!sys.window.lo.finite || !sys.window.hi.finite)
    throw std::invalid_argument("verify_compat_lue: finite window required");

  const int wd = sys.digits_used;
  Real a = sys.window.lo.x.rounded_to(wd);
  Real b = sys.window.hi.x.rounded_to(wd);
  Real al = sys.weight.alpha.rounded_to(wd);
  LueLadder lm = lue_ladder(sys, n - 1);
  LueLadder l = lue_ladder(sys, n);
  LueLadder lp = lue_ladder(sys, n + 1);
  Real alpha_n = sys.alpha[n];
  Real beta_n = sys.beta[n];
  Real beta_p = sys.beta[n + 1];

  std::vector<LueLadder> all;
  for (int j = 0; j <= n + 1; ++j) all.push_back(lue_ladder(sys, j));
  Real sum_R(0L, wd), sum_Ra(0L, wd), sum_Rb(0L, wd);
  for (int j = 0; j < n; ++j) {
    sum_R += all[j].R;
    sum_Ra += all[j].R_a;
    sum_Rb += all[j].R_b;
  }

  CompatReport rep;
  rep.n = n;
  auto put = [&](const std::string& name, const Real& residual, const std::vector<Real>& terms) {
    rep.residuals.emplace(name, detail::normalized(residual, terms));
  };

  put("R_sum_rule", l.R + l.R_a + l.R_b - 1, {l.R, l.R_a, l.R_b, Real(1L, wd)});
  put("string_0", l.r + lp.r - (al - alpha_n * l.R), {l.r, lp.r, al, alpha_n * l.R});
  put("string_a", l.r_a + lp.r_a - (a - alpha_n) * l.R_a, {l.r_a, lp.r_a, (a - alpha_n) * l.R_a});
  put("string_b", l.r_b + lp.r_b - (b - alpha_n) * l.R_b, {l.r_b, lp.r_b, (b - alpha_n) * l.R_b});
  put("r_square_0", l.r * l.r - al * l.r - beta_n * l.R * lm.R,
      {l.r * l.r, al * l.r, beta_n * l.R * lm.R});
  put("r_square_a", l.r_a * l.r_a - beta_n * lm.R_a * l.R_a,
      {l.r_a * l.r_a, beta_n * lm.R_a * l.R_a});
  put("r_square_b", l.r_b * l.r_b - beta_n * lm.R_b * l.R_b,
      {l.r_b * l.r_b, beta_n * lm.R_b * l.R_b});

  {
    Real lhs = -2 * l.r * l.r_a / a - 2 * l.r * l.r_b / b + l.r + al * l.r_a / a + al * l.r_b / b +
               sum_R;
    Real rhs = -beta_n * ((lm.R_a * l.R + lm.R * l.R_a) / a + (lm.R_b * l.R + lm.R * l.R_b) / b);
    put("window_sum_0", lhs - rhs, {lhs, rhs});
  }
  {
    Real lhs = 2 * l.r * l.r_a / a + 2 * l.r_a * l.r_b / (a - b) + l.r_a - al * l.r_a / a + sum_Ra;
    Real rhs = beta_n * ((lm.R_a * l.R + lm.R * l.R_a) / a + (lm.R_a * l.R_b + lm.R_b * l.R_a) / (a - b));
    put("window_sum_a", lhs - rhs, {lhs, rhs});
  }
  {
    Real lhs = 2 * l.r * l.r_b / b + 2 * l.r_a * l.r_b / (b - a) + l.r_b - al * l.r_b / b + sum_Rb;
    Real rhs = beta_n * ((lm.R_b * l.R + lm.R * l.R_b) / b + (lm.R_a * l.R_b + lm.R_b * l.R_a) / (b - a));
    put("window_sum_b", lhs - rhs, {lhs, rhs});
  }

  put("shift_sum", 1 + lp.r - l.r + lp.r_a - l.r_a + lp.r_b - l.r_b,
      {Real(1L, wd), lp.r, l.r, lp.r_a, l.r_a, lp.r_b, l.r_b});
  put("shift_0", alpha_n * (l.r - lp.r) - (beta_p * lp.R - beta_n * lm.R),
      {alpha_n * (l.r - lp.r), beta_p * lp.R, beta_n * lm.R});
  put("shift_a", (a - alpha_n) * (lp.r_a - l.r_a) - (beta_p * lp.R_a - beta_n * lm.R_a),
      {(a - alpha_n) * (lp.r_a - l.r_a), beta_p * lp.R_a, beta_n * lm.R_a});
  put("shift_b", (b - alpha_n) * (lp.r_b - l.r_b) - (beta_p * lp.R_b - beta_n * lm.R_b),
      {(b - alpha_n) * (lp.r_b - l.r_b), beta_p * lp.R_b, beta_n * lm.R_b});

  put("r_sum_rule", l.r + l.r_a + l.r_b + Real(n, wd), {l.r, l.r_a, l.r_b, Real(n, wd)});
  put("alpha_representation", alpha_n - (al + a * l.R_a + b * l.R_b + 2 * n + 1),
      {alpha_n, al, a * l.R_a, b * l.R_b, Real(2 * n + 1, wd)});

  {
    // Both sums start at j = 0.
    Real lhs = a * sum_Ra + b * sum_Rb;
    Real rhs = beta_n * (l.R_a + l.R_b) + (l.r_a * l.r_a / l.R_a) * (1 - l.R_b) +
               (l.r_b * l.r_b / l.R_b) * (1 - l.R_a) + (2 * n + al - a) * l.r_a +
               (2 * n + al - b) * l.r_b + 2 * l.r_a * l.r_b;
    put("weighted_window_sum", lhs - rhs, {lhs, rhs});
  }

  auto probes = detail::probe_points(sys);
  for (size_t i = 0; i < probes.size(); ++i) {
    const Real& z = probes[i];
    auto fn = detail::lue_ab_at(sys, l, z);
    auto fp = detail::lue_ab_at(sys, lp, z);
    Real s1 = fp.B + fn.B - (z - alpha_n) * fn.A + v_prime(sys.weight, z);
    put("s1_z" + std::to_string(i), s1, {fp.B, fn.B, (z - alpha_n) * fn.A, v_prime(sys.weight, z)});

    auto fm = detail::lue_ab_at(sys, lm, z);
    Real sumA = sum_R / z + sum_Ra / (z - a) + sum_Rb / (z - b);
    Real s2 = fn.B * fn.B + v_prime(sys.weight, z) * fn.B + sumA - beta_n * fn.A * fm.A;
    put("s2_z" + std::to_string(i), s2,
        {fn.B * fn.B, v_prime(sys.weight, z) * fn.B, sumA, beta_n * fn.A * fm.A});
  }

  rep.tolerance = pow10(-sys.digits_used / 3, 20);
  rep.pass = true;
  for (const auto& [name, r] : rep.residuals)
    if (!(r < rep.tolerance)) rep.pass = false;
  return rep;
}

}  // namespace gaplab
