// Finite-difference machinery and the master PDE residuals.
//
// First partials of H_n are exact boundary quantities (2 r_{n,a} / 2 r_{n,b}
// for Gaussian, r_{n,a} / r_{n,b} for Laguerre), so only the second partials
// are obtained by differencing, applied to those exact first partials. That
// keeps every FD comparison a genuine two-sided test instead of a circular
// one.
//
// The PDE residual evaluators are pure functions of (H, first and second
// partials); the assembly step feeds them the exact first partials. Root
// branches are fixed by the signs of the endpoint residues: the a-side root
// is positive, the b-side root negative, and the shared prefactor
// 2n + dH_a + dH_b (Gaussian, equal to 4 beta_n) stays positive.

#pragma once

#include <array>

#include "gaplab/gap.hpp"

namespace gaplab {

enum class FDOrder { central2, richardson4 };

struct FDScheme {
  Real step;
  FDOrder order = FDOrder::richardson4;

  // step = 10^(-digits/5) scaled by the window size, balancing truncation
  // against cancellation at extended precision.
  static FDScheme standard(int digits, const Real& a, const Real& b,
                           FDOrder order = FDOrder::richardson4) {
    FDScheme s;
    s.step = pow10(-digits / 5, 30) * max(Real(1L, 30), max(abs(a), abs(b)));
    s.order = order;
    return s;
  }

  void validate(const Real& a, const Real& b) const {
    if (!(step > 0)) throw std::invalid_argument("FDScheme: step must be > 0");
    if (!(step < (b - a) / 10)) throw std::invalid_argument("FDScheme: step too large for window");
  }
};

struct PDEResidualReport {
  int n = 0;
  Window point;
  int digits = 0;
  Real fd_step;
  bool valid = true;  // false when a discriminant went negative (FD error dominates)

  Real raw_sqrt, scale_sqrt, residual_sqrt_form;           // relative
  Real raw_cleared, scale_cleared, residual_cleared_form;  // relative
  std::map<std::string, Real> checks;  // branch reconstruction and side identities
};

namespace detail {

// (d_a H, d_b H) at a window, exact through the boundary quantities.
inline std::pair<Real, Real> first_partials(const WeightSpec& w, int n, const Real& a,
                                            const Real& b, int digits) {
  auto sys = build_from_moments(w, Window{Bound::at(a), Bound::at(b)}, n, digits);
  if (w.is_gaussian()) {
    auto l = gue_ladder(sys, n);
    return {2 * l.r_a, 2 * l.r_b};
  }
  auto l = lue_ladder(sys, n);
  return {l.r_a, l.r_b};
}

struct SecondPartials {
  Real Haa, Hab, Hbb;
};

inline SecondPartials second_partials_at_step(const WeightSpec& w, int n, const Real& a,
                                              const Real& b, const Real& h, int digits) {
  auto pa_plus = first_partials(w, n, a + h, b, digits);
  auto pa_minus = first_partials(w, n, a - h, b, digits);
  auto pb_plus = first_partials(w, n, a, b + h, digits);
  auto pb_minus = first_partials(w, n, a, b - h, digits);
  SecondPartials s;
  s.Haa = (pa_plus.first - pa_minus.first) / (2 * h);
  s.Hbb = (pb_plus.second - pb_minus.second) / (2 * h);
  // d_b of the exact d_a H; equal to d_a of d_b H up to FD truncation.
  s.Hab = (pb_plus.first - pb_minus.first) / (2 * h);
  return s;
}

}  // namespace detail

inline detail::SecondPartials fd_second_partials(const WeightSpec& w, int n, const Window& win,
                                                 const FDScheme& scheme, int digits) {
  win.validate(w);
  if (!win.lo.finite || !win.hi.finite)
    throw std::invalid_argument("fd_second_partials: finite window required");
  scheme.validate(win.lo.x, win.hi.x);
  // Endpoints promoted so a +- h keeps full working precision.
  Real a = win.lo.x.rounded_to(digits + 20), b = win.hi.x.rounded_to(digits + 20);
  auto coarse = detail::second_partials_at_step(w, n, a, b, scheme.step, digits);
  if (scheme.order == FDOrder::central2) return coarse;
  auto fine = detail::second_partials_at_step(w, n, a, b, scheme.step / 2, digits);
  // The two-step disagreement estimates the truncation; a large value means
  // the step cannot resolve the local curvature.
  Real disagree(0L, 30);
  for (auto pr : {std::pair<const Real&, const Real&>{coarse.Haa, fine.Haa},
                  {coarse.Hab, fine.Hab},
                  {coarse.Hbb, fine.Hbb}})
    disagree = max(disagree, abs(pr.first - pr.second) / max(Real(1L, 20), abs(pr.second)));
  if (disagree > 1e-3)
    throw std::runtime_error("fd_second_partials: step too large (Richardson disagreement)");
  detail::SecondPartials r;
  r.Haa = (4 * fine.Haa - coarse.Haa) / 3;
  r.Hab = (4 * fine.Hab - coarse.Hab) / 3;
  r.Hbb = (4 * fine.Hbb - coarse.Hbb) / 3;
  return r;
}

// ---- pure residual evaluators ---------------------------------------------

struct GuePdeInput {
  int n;
  Real a, b, H, Ha, Hb, Haa, Hab, Hbb;
};

struct PdeEval {
  bool valid = true;
  Real raw_sqrt, scale_sqrt;
  Real raw_cleared, scale_cleared;
  Real root_a, root_b;  // reconstructed endpoint residues from the branches
  Real prefactor;       // 2n + Ha + Hb (Gaussian) or 2(n^2+alpha n-H+aHa+bHb) (Laguerre)
};

inline PdeEval gue_pde_eval(const GuePdeInput& in) {
  PdeEval ev;
  Real S = 2 * Real(in.n, 40) + in.Ha + in.Hb;
  ev.prefactor = S;
  Real Xa = (in.Haa + in.Hab) * (in.Haa + in.Hab) + 4 * in.Ha * in.Ha * S;
  Real Xb = (in.Hbb + in.Hab) * (in.Hbb + in.Hab) + 4 * in.Hb * in.Hb * S;
  if (Xa < 0 || Xb < 0 || !(S > 0)) {
    ev.valid = false;
    return ev;
  }
  Real sa = sqrt(Xa), sb = sqrt(Xb);
  Real L = 2 * in.b * in.Hb + 2 * in.a * in.Ha - 2 * in.H;
  ev.raw_sqrt = L - sa + sb;
  ev.scale_sqrt = max(Real(1L, 20), max(abs(L), max(sa, sb)));

  Real L2 = L * L;
  Real A = L2 - Xa - Xb;
  ev.raw_cleared = A * A - 4 * Xa * Xb;
  ev.scale_cleared = max(Real(1L, 20), max(A * A, 4 * Xa * Xb));

  ev.root_a = (-(in.Haa + in.Hab) + sa) / (2 * S);
  ev.root_b = (-(in.Hbb + in.Hab) - sb) / (2 * S);
  return ev;
}

struct LuePdeInput {
  int n;
  Real alpha, a, b, H, Ha, Hb, Haa, Hab, Hbb;
};

inline PdeEval lue_pde_eval(const LuePdeInput& in) {
  PdeEval ev;
  const Real n(in.n, 40);
  Real W = n * n + in.alpha * n - in.H + in.a * in.Ha + in.b * in.Hb;
  Real l = 2 * W;
  ev.prefactor = l;
  Real Ua = in.a * in.Haa + in.b * in.Hab;
  Real Ub = in.b * in.Hbb + in.a * in.Hab;
  Real D1 = Ua * Ua + 4 * in.Ha * in.Ha * W;
  Real D2 = Ub * Ub + 4 * in.Hb * in.Hb * W;
  if (D1 < 0 || D2 < 0 || !(W > 0)) {
    ev.valid = false;
    return ev;
  }
  Real s1 = sqrt(D1), s2 = sqrt(D2);
  Real k = l * (in.H + (2 * n + in.alpha - in.a) * in.Ha + (2 * n + in.alpha - in.b) * in.Hb +
                2 * in.Ha * in.Hb) +
           Ua * Ub;
  // Signs resolved by the endpoint residues: k = -l(s1 - s2) - s1 s2.
  ev.raw_sqrt = k + l * (s1 - s2) + s1 * s2;
  ev.scale_sqrt = max(Real(1L, 20), max(abs(k), max(l * s1, max(l * s2, s1 * s2))));

  // Root-free form by repeated isolation and squaring of
  // k - e3 s1 s2 = l (e1 s1 + e2 s2); the result is sign-branch free.
  Real P = D1 * D2;
  Real l2 = l * l;
  Real A = k * k + P - l2 * (D1 + D2);
  Real B = A * A - 4 * P * (k * k + l2 * l2);
  ev.raw_cleared = B * B - 64 * k * k * l2 * l2 * P * P;
  ev.scale_cleared = max(Real(1L, 20), max(B * B, 64 * k * k * l2 * l2 * P * P));

  ev.root_a = (-Ua + s1) / l;
  ev.root_b = (-Ub - s2) / l;
  return ev;
}

// ---- assembled PDE residual reports ----------------------------------------

inline PDEResidualReport pde_residual_gue(const WeightSpec& w, int n, const Window& win,
                                          const FDScheme& scheme, int digits) {
  if (!w.is_gaussian()) throw std::invalid_argument("pde_residual_gue: Gaussian only");
  auto sys = build_from_moments(w, win, n, digits);
  auto l = gue_ladder(sys, n);
  auto sp = fd_second_partials(w, n, win, scheme, digits);

  GuePdeInput in{n,       win.lo.x.rounded_to(digits), win.hi.x.rounded_to(digits),
                 H_of(sys, n), 2 * l.r_a,              2 * l.r_b,
                 sp.Haa,  sp.Hab,                      sp.Hbb};
  auto ev = gue_pde_eval(in);

  PDEResidualReport rep;
  rep.n = n;
  rep.point = win;
  rep.digits = digits;
  rep.fd_step = scheme.step;
  rep.valid = ev.valid;
  if (!ev.valid) return rep;
  rep.raw_sqrt = ev.raw_sqrt;
  rep.scale_sqrt = ev.scale_sqrt;
  rep.residual_sqrt_form = abs(ev.raw_sqrt) / ev.scale_sqrt;
  rep.raw_cleared = ev.raw_cleared;
  rep.scale_cleared = ev.scale_cleared;
  rep.residual_cleared_form = abs(ev.raw_cleared) / ev.scale_cleared;
  rep.checks["root_a_vs_ladder"] = abs(ev.root_a - l.R_a) / max(Real(1L, 20), abs(l.R_a));
  rep.checks["root_b_vs_ladder"] = abs(ev.root_b - l.R_b) / max(Real(1L, 20), abs(l.R_b));
  rep.checks["prefactor_vs_beta"] =
      abs(ev.prefactor - 4 * sys.beta[n]) / max(Real(1L, 20), 4 * sys.beta[n]);
  return rep;
}

inline PDEResidualReport pde_residual_lue(const WeightSpec& w, int n, const Window& win,
                                          const FDScheme& scheme, int digits) {
  if (!w.is_laguerre()) throw std::invalid_argument("pde_residual_lue: Laguerre only");
  auto sys = build_from_moments(w, win, n, digits);
  auto l = lue_ladder(sys, n);
  auto sp = fd_second_partials(w, n, win, scheme, digits);

  LuePdeInput in{n,       w.alpha.rounded_to(digits),  win.lo.x.rounded_to(digits),
                 win.hi.x.rounded_to(digits), H_of(sys, n), l.r_a, l.r_b,
                 sp.Haa,  sp.Hab,                      sp.Hbb};
  auto ev = lue_pde_eval(in);

  PDEResidualReport rep;
  rep.n = n;
  rep.point = win;
  rep.digits = digits;
  rep.fd_step = scheme.step;
  rep.valid = ev.valid;
  if (!ev.valid) return rep;
  rep.raw_sqrt = ev.raw_sqrt;
  rep.scale_sqrt = ev.scale_sqrt;
  rep.residual_sqrt_form = abs(ev.raw_sqrt) / ev.scale_sqrt;
  rep.raw_cleared = ev.raw_cleared;
  rep.scale_cleared = ev.scale_cleared;
  rep.residual_cleared_form = abs(ev.raw_cleared) / ev.scale_cleared;
  rep.checks["root_a_vs_ladder"] = abs(ev.root_a - l.R_a) / max(Real(1L, 20), abs(l.R_a));
  rep.checks["root_b_vs_ladder"] = abs(ev.root_b - l.R_b) / max(Real(1L, 20), abs(l.R_b));
  rep.checks["l_vs_beta"] = abs(ev.prefactor - 2 * sys.beta[n]) / max(Real(1L, 20), 2 * sys.beta[n]);
  return rep;
}

// ---- Toda flow of the recurrence coefficients ------------------------------

inline CompatReport toda_check(const WeightSpec& w, int n, const Window& win,
                               const FDScheme& scheme, int digits) {
  win.validate(w);
  if (!win.lo.finite || !win.hi.finite)
    throw std::invalid_argument("toda_check: finite window required");
  if (n < 1) throw std::invalid_argument("toda_check: n must be >= 1");
  scheme.validate(win.lo.x, win.hi.x);

  const Real a = win.lo.x.rounded_to(digits + 20), b = win.hi.x.rounded_to(digits + 20);
  const Real h = scheme.step;

  // Coefficients at a flowed window. Gaussian flows both endpoints by t;
  // Laguerre dilates them by (1+t), realizing a d_a + b d_b.
  auto coeffs = [&](const Real& t) {
    Window wshift = w.is_gaussian()
                        ? Window{Bound::at(a + t), Bound::at(b + t)}
                        : Window{Bound::at(a * (1 + t)), Bound::at(b * (1 + t))};
    auto sys = build_from_moments(w, wshift, n + 1, digits);
    return std::array<Real, 3>{sys.alpha[n], sys.beta[n], sys.beta[n + 1]};
  };

  auto flow = [&](const Real& step) {
    auto plus = coeffs(step);
    auto minus = coeffs(-step);
    return std::pair<Real, Real>{(plus[0] - minus[0]) / (2 * step),
                                 (plus[1] - minus[1]) / (2 * step)};
  };
  auto d1 = flow(h);
  Real d_alpha = d1.first, d_beta = d1.second;
  if (scheme.order == FDOrder::richardson4) {
    auto d2 = flow(h / 2);
    d_alpha = (4 * d2.first - d1.first) / 3;
    d_beta = (4 * d2.second - d1.second) / 3;
  }

  auto center = coeffs(Real(0L, digits));
  auto sys = build_from_moments(w, win, n + 1, digits);
  Real alpha_nm1 = sys.alpha[n - 1];

  CompatReport rep;
  rep.n = n;
  auto put = [&](const std::string& name, const Real& res, const std::vector<Real>& terms) {
    Real scale(1L, 20);
    for (const auto& t : terms) scale = max(scale, abs(t));
    rep.residuals.emplace(name, abs(res) / scale);
  };

  if (w.is_gaussian()) {
    put("beta_flow", d_beta / center[1] - 2 * (alpha_nm1 - center[0]),
        {d_beta / center[1], 2 * alpha_nm1, 2 * center[0]});
    put("alpha_flow", d_alpha - 2 * (center[1] - center[2]) - 1,
        {d_alpha, 2 * center[1], 2 * center[2], Real(1L, 20)});
  } else {
    // The dilation derivative is (a d_a + b d_b) directly.
    put("beta_flow", d_beta - center[1] * (alpha_nm1 - center[0] + 2),
        {d_beta, center[1] * (alpha_nm1 - center[0] + 2)});
    put("alpha_flow", d_alpha - center[0] - (center[1] - center[2]),
        {d_alpha, center[0], center[1], center[2]});
  }

  int p = scheme.order == FDOrder::richardson4 ? 4 : 2;
  rep.tolerance = max(pow10(-digits / 2, 20), 1000 * pow(h, static_cast<long>(p)));
  rep.pass = true;
  for (const auto& [name, r] : rep.residuals)
    if (!(r < rep.tolerance)) rep.pass = false;
  return rep;
}

// ---- one-sided limits -------------------------------------------------------

// sigma data for ODE-reduction checks: the far endpoint is pinned at a finite
// cutoff and the bound on the discarded weight is reported with the values.
struct SigmaPoint {
  Real z, sigma, sigma_p, sigma_pp;
  Real far_endpoint;
  Real cutoff_bound;
};

inline SigmaPoint onesided_sigma_gue(int n, const Real& b, const FDScheme& scheme, int digits) {
  Real a_far(-std::max(20.0, std::sqrt(2.0 * n) + 12.0), digits);
  auto sys = build_from_moments(WeightSpec::gaussian(), Window{Bound::at(a_far), Bound::at(b)}, n,
                                digits);
  SigmaPoint s;
  s.z = b.rounded_to(digits);
  s.far_endpoint = a_far;
  s.cutoff_bound = exp(-(a_far * a_far));
  s.sigma = H_of(sys, n);
  s.sigma_p = 2 * gue_ladder(sys, n).r_b;
  Real bw = b.rounded_to(digits + 20);
  auto dsig = [&](const Real& h) {
    auto lo = build_from_moments(WeightSpec::gaussian(),
                                 Window{Bound::at(a_far), Bound::at(bw - h)}, n, digits);
    auto hi = build_from_moments(WeightSpec::gaussian(),
                                 Window{Bound::at(a_far), Bound::at(bw + h)}, n, digits);
    return (2 * gue_ladder(hi, n).r_b - 2 * gue_ladder(lo, n).r_b) / (2 * h);
  };
  Real d1 = dsig(scheme.step);
  s.sigma_pp = d1;
  if (scheme.order == FDOrder::richardson4) s.sigma_pp = (4 * dsig(scheme.step / 2) - d1) / 3;
  return s;
}

inline SigmaPoint onesided_sigma_lue(int n, const Real& alpha, const Real& a,
                                     const FDScheme& scheme, int digits) {
  auto w = WeightSpec::laguerre(alpha);
  Real b_far(40.0 + 10.0 * n, digits);
  auto sys = build_from_moments(w, Window{Bound::at(a), Bound::at(b_far)}, n, digits);
  SigmaPoint s;
  s.z = a.rounded_to(digits);
  s.far_endpoint = b_far;
  s.cutoff_bound = exp(alpha * log(b_far) - b_far);
  s.sigma = H_of(sys, n);
  s.sigma_p = lue_ladder(sys, n).r_a;
  Real aw = a.rounded_to(digits + 20);
  auto dsig = [&](const Real& h) {
    auto lo = build_from_moments(w, Window{Bound::at(aw - h), Bound::at(b_far)}, n, digits);
    auto hi = build_from_moments(w, Window{Bound::at(aw + h), Bound::at(b_far)}, n, digits);
    return (lue_ladder(hi, n).r_a - lue_ladder(lo, n).r_a) / (2 * h);
  };
  Real d1 = dsig(scheme.step);
  s.sigma_pp = d1;
  if (scheme.order == FDOrder::richardson4) s.sigma_pp = (4 * dsig(scheme.step / 2) - d1) / 3;
  return s;
}

}  // namespace gaplab
