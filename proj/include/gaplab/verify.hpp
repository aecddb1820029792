// The acceptance suite: nine end-to-end checks covering the difference
// identities, the two construction routes, the H identities, both master
// PDEs, the Toda flows, the one-sided ODE reductions, the oracle triangle,
// the edge-scaling limits and the asymptotic-independence evidence. Every
// tolerance is pinned here. The CLI selftest runs the same checks in fast
// mode (reduced point counts, same tolerances).

#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "gaplab/commands.hpp"

namespace gaplab::verify {

struct Options {
  bool fast = false;
  double tol_scale = 1.0;   // testing hook; 1.0 in real runs
  bool show_timing = true;  // off for byte-reproducible selftest reports
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

namespace detail_v {

inline Real scaled(const Real& tol, const Options& opt) { return tol * opt.tol_scale; }

struct WindowGen {
  std::mt19937_64 rng;
  explicit WindowGen(std::uint64_t seed) : rng(seed) {}

  Window gue_window(int digits) {
    std::uniform_real_distribution<double> ua(-2.5, -0.1), uw(0.8, 3.2);
    double a = ua(rng);
    return Window::of(Real(a, digits), Real(a + uw(rng), digits));
  }
  Window lue_window(int digits) {
    std::uniform_real_distribution<double> ua(0.1, 1.2), uw(1.5, 5.5);
    double a = ua(rng);
    return Window::of(Real(a, digits), Real(a + uw(rng), digits));
  }
};

inline std::string real8(const Real& x) { return x.str(8); }

}  // namespace detail_v

// 1. Every difference identity from both supplementary conditions, on random
//    windows, at 80 digits, relative residual below 10^(-digits/3).
inline CheckResult criterion_compatibility(const Options& opt) {
  const int digits = 80;
  const int windows = opt.fast ? 2 : 10;
  const int n_hi = opt.fast ? 3 : 6;
  detail_v::WindowGen gen(101);
  Real worst(0L, 30);
  bool pass = true;
  for (int t = 0; t < windows; ++t) {
    auto win_g = gen.gue_window(digits);
    auto sys_g = build_from_moments(WeightSpec::gaussian(), win_g, n_hi + 1, digits);
    auto win_l = gen.lue_window(digits);
    double alphas[3] = {0.5, 1.0, 2.5};
    auto sys_l = build_from_moments(WeightSpec::laguerre(alphas[t % 3]), win_l, n_hi + 1, digits);
    for (int n = 1; n <= n_hi; ++n) {
      for (const CompatReport& rep : {verify_compat_gue(sys_g, n), verify_compat_lue(sys_l, n)}) {
        Real tol = detail_v::scaled(rep.tolerance, opt);
        for (const auto& [name, r] : rep.residuals) {
          worst = max(worst, r);
          if (!(r < tol)) pass = false;
        }
      }
    }
  }
  return {"compatibility-suite", pass,
          "worst relative residual " + detail_v::real8(worst) + " (tol 1e-26)", 0};
}

// 2. Moment-factorization and Stieltjes systems agree to 1e-20 at 60 digits.
inline CheckResult criterion_construction(const Options& opt) {
  const int digits = 60, n_max = 10;
  const int windows = opt.fast ? 3 : 10;
  detail_v::WindowGen gen(202);
  Real worst(0L, 30);
  auto dev = [](const Real& x, const Real& y) {
    return abs(x - y) / max(Real(1L, 20), max(abs(x), abs(y)));
  };
  for (int t = 0; t < windows; ++t) {
    for (int which = 0; which < 2; ++which) {
      WeightSpec w = which ? WeightSpec::laguerre(1.0) : WeightSpec::gaussian();
      Window win = which ? gen.lue_window(digits) : gen.gue_window(digits);
      auto m = build_from_moments(w, win, n_max, digits);
      auto q = build_by_quadrature(w, win, n_max, 192, digits);
      for (int k = 0; k <= n_max; ++k) {
        worst = max(worst, dev(m.h[k], q.h[k]));
        worst = max(worst, dev(m.alpha[k], q.alpha[k]));
        worst = max(worst, dev(m.p1[k + 1], q.p1[k + 1]));
        if (k >= 1) worst = max(worst, dev(m.beta[k], q.beta[k]));
      }
    }
  }
  bool pass = worst < detail_v::scaled(pow10(-20, 20), opt);
  return {"construction-cross-validation", pass,
          "worst field deviation " + detail_v::real8(worst) + " (tol 1e-20)", 0};
}

// 3. H assembled from boundary quantities equals the p1 route at 1e-digits/2,
//    and Richardson finite differences of H reproduce the exact gradients.
inline CheckResult criterion_h_identities(const Options& opt) {
  const int digits = 80;
  const int samples = opt.fast ? 8 : 50;
  const int fd_samples = opt.fast ? 2 : 10;
  detail_v::WindowGen gen(303);
  std::uniform_int_distribution<int> un(1, 8);
  Real worst_h(0L, 30), worst_fd(0L, 30);
  bool pass = true;
  Real tol_h = detail_v::scaled(pow10(-digits / 2, 20), opt);
  Real tol_fd = detail_v::scaled(pow10(-2 * digits / 5, 20), opt);

  for (int t = 0; t < samples; ++t) {
    int n = un(gen.rng);
    bool lue = t % 2;
    WeightSpec w = lue ? WeightSpec::laguerre(1.0) : WeightSpec::gaussian();
    Window win = lue ? gen.lue_window(digits) : gen.gue_window(digits);
    auto sys = build_from_moments(w, win, n, digits);
    Real href = H_of(sys, n);
    Real scale = max(Real(1L, 20), abs(href));
    Real d1 = abs((lue ? lue_h_from_ladder(sys, n) : gue_h_from_ladder(sys, n)) - href) / scale;
    Real d2 = abs((lue ? lue_h_eliminated(sys, n) : gue_h_eliminated(sys, n)) - href) / scale;
    worst_h = max(worst_h, max(d1, d2));
    if (!(d1 < tol_h) || !(d2 < tol_h)) pass = false;
  }

  for (int t = 0; t < fd_samples; ++t) {
    int n = 1 + t % 4;
    bool lue = t % 2;
    WeightSpec w = lue ? WeightSpec::laguerre(1.0) : WeightSpec::gaussian();
    Window win = lue ? gen.lue_window(digits) : gen.gue_window(digits);
    Real a = win.lo.x.rounded_to(digits + 20), b = win.hi.x.rounded_to(digits + 20);
    auto sys = build_from_moments(w, win, n, digits);
    Real Ha_exact(0L, digits), Hb_exact(0L, digits);
    if (lue) {
      auto l = lue_ladder(sys, n);
      Ha_exact = l.r_a;
      Hb_exact = l.r_b;
    } else {
      auto l = gue_ladder(sys, n);
      Ha_exact = 2 * l.r_a;
      Hb_exact = 2 * l.r_b;
    }
    Real h = pow10(-digits / 5, 40);
    auto H_at = [&](const Real& aa, const Real& bb) {
      return H_of(build_from_moments(w, Window{Bound::at(aa), Bound::at(bb)}, n, digits), n);
    };
    auto rich = [&](bool in_a) {
      auto fd_at = [&](const Real& step) {
        return in_a ? (H_at(a + step, b) - H_at(a - step, b)) / (2 * step)
                    : (H_at(a, b + step) - H_at(a, b - step)) / (2 * step);
      };
      Real c1 = fd_at(h), c2 = fd_at(h / 2);
      return (4 * c2 - c1) / 3;
    };
    Real da = abs(rich(true) - Ha_exact) / max(Real(1L, 20), abs(Ha_exact));
    Real db = abs(rich(false) - Hb_exact) / max(Real(1L, 20), abs(Hb_exact));
    worst_fd = max(worst_fd, max(da, db));
    if (!(da < tol_fd) || !(db < tol_fd)) pass = false;
  }
  return {"h-identities", pass,
          "worst H deviation " + detail_v::real8(worst_h) + " (tol 1e-40), worst gradient FD " +
              detail_v::real8(worst_fd) + " (tol 1e-32)",
          0};
}

// 4. Master PDE residuals on a 3x3 window grid for n in {2,3,4}; square-root
//    and cleared forms; FD-truncation scaling check.
inline CheckResult criterion_master_pdes(const Options& opt) {
  bool pass = true;
  Real worst_g(0L, 30), worst_l(0L, 30);
  Real tol_g = detail_v::scaled(pow10(-10, 20), opt);
  Real tol_l = detail_v::scaled(pow10(-8, 20), opt);
  std::vector<int> ns = opt.fast ? std::vector<int>{2} : std::vector<int>{2, 3, 4};
  std::vector<double> ga = {-1.6, -1.0, -0.4}, gb = {0.7, 1.3, 1.9};
  std::vector<double> la = {0.4, 0.8, 1.2}, lb = {3.5, 5.0, 6.5};
  if (opt.fast) {
    ga = {-1.0};
    la = {0.8};
  }
  const int dg = 90, dl = 100;
  for (int n : ns) {
    for (double a : ga) {
      for (double b : gb) {
        auto win = Window::of(Real(a, dg), Real(b, dg));
        auto scheme = FDScheme::standard(dg, win.lo.x, win.hi.x);
        auto rep = pde_residual_gue(WeightSpec::gaussian(), n, win, scheme, dg);
        if (!rep.valid) pass = false;
        worst_g = max(worst_g, max(rep.residual_sqrt_form, rep.residual_cleared_form));
        if (!(rep.residual_sqrt_form < tol_g) || !(rep.residual_cleared_form < tol_g)) pass = false;
      }
    }
    for (double a : la) {
      for (double b : lb) {
        auto win = Window::of(Real(a, dl), Real(b, dl));
        auto scheme = FDScheme::standard(dl, win.lo.x, win.hi.x);
        auto rep = pde_residual_lue(WeightSpec::laguerre(1.3), n, win, scheme, dl);
        if (!rep.valid) pass = false;
        worst_l = max(worst_l, max(rep.residual_sqrt_form, rep.residual_cleared_form));
        if (!(rep.residual_sqrt_form < tol_l) || !(rep.residual_cleared_form < tol_l)) pass = false;
      }
    }
  }

  std::string ratio_note;
  if (!opt.fast) {
    // Residuals are FD truncation: halving the step divides them by about 4.
    auto ratio_of = [&](bool gue) {
      Window win = gue ? Window::of(Real(-1L, 90), Real(2L, 90))
                       : Window::of(Real(0.5, 90), Real(5L, 90));
      FDScheme coarse{pow10(-5, 40), FDOrder::central2};
      FDScheme fine{pow10(-5, 40) / 2, FDOrder::central2};
      auto r1 = gue ? pde_residual_gue(WeightSpec::gaussian(), 2, win, coarse, 90)
                    : pde_residual_lue(WeightSpec::laguerre(1.3), 2, win, coarse, 90);
      auto r2 = gue ? pde_residual_gue(WeightSpec::gaussian(), 2, win, fine, 90)
                    : pde_residual_lue(WeightSpec::laguerre(1.3), 2, win, fine, 90);
      return (r1.residual_sqrt_form / r2.residual_sqrt_form).to_double();
    };
    double rg = ratio_of(true), rl = ratio_of(false);
    if (!(rg > 3.0 && rg < 5.5 && rl > 3.0 && rl < 5.5)) pass = false;
    std::ostringstream os;
    os << ", step-halving ratios " << rg << " / " << rl << " (expected ~4)";
    ratio_note = os.str();
  }
  return {"master-pdes", pass,
          "worst residual " + detail_v::real8(worst_g) + " (tol 1e-10 Gaussian), " +
              detail_v::real8(worst_l) + " (tol 1e-8 Laguerre)" + ratio_note,
          0};
}

// 5. Toda flows at n in {2,3} on five windows per ensemble.
inline CheckResult criterion_toda(const Options& opt) {
  const int digits = 60;
  const int windows = opt.fast ? 2 : 5;
  detail_v::WindowGen gen(505);
  bool pass = true;
  Real worst(0L, 30);
  for (int t = 0; t < windows; ++t) {
    for (int n : {2, 3}) {
      auto win_g = gen.gue_window(digits);
      auto rep_g = toda_check(WeightSpec::gaussian(), n, win_g,
                              FDScheme::standard(digits, win_g.lo.x, win_g.hi.x), digits);
      auto win_l = gen.lue_window(digits);
      auto rep_l = toda_check(WeightSpec::laguerre(1.0), n, win_l,
                              FDScheme::standard(digits, win_l.lo.x, win_l.hi.x), digits);
      for (const auto* rep : {&rep_g, &rep_l}) {
        Real tol = detail_v::scaled(rep->tolerance, opt);
        for (const auto& [name, r] : rep->residuals) {
          worst = max(worst, r);
          if (!(r < tol)) pass = false;
        }
      }
    }
  }
  return {"toda-suite", pass, "worst relative residual " + detail_v::real8(worst), 0};
}

// 6. One-sided windows satisfy the fourth/fifth Painleve sigma forms.
inline CheckResult criterion_ode_reductions(const Options& opt) {
  const int digits = 100;
  Real tol = detail_v::scaled(pow10(-8, 20), opt);
  Real worst(0L, 30);
  bool pass = true;
  std::vector<int> ns = opt.fast ? std::vector<int>{2} : std::vector<int>{2, 3};
  std::vector<double> zg = opt.fast ? std::vector<double>{0.5} : std::vector<double>{-1.0, 0.5, 1.8};
  std::vector<double> zl = opt.fast ? std::vector<double>{1.5} : std::vector<double>{0.5, 2.0, 4.0};
  for (int n : ns) {
    for (double b : zg) {
      auto scheme = FDScheme::standard(digits, Real(-20L, 40), Real(b, 40));
      Real r = onesided_piv_residual(n, Real(b, digits), scheme, digits).relative();
      worst = max(worst, r);
      if (!(r < tol)) pass = false;
    }
    for (double a : zl) {
      auto scheme = FDScheme::standard(digits, Real(a, 40), Real(40L + 10 * n, 40));
      Real r = onesided_pv_residual(n, Real(1L, digits), Real(a, digits), scheme, digits).relative();
      worst = max(worst, r);
      if (!(r < tol)) pass = false;
    }
  }
  return {"ode-reductions", pass,
          "worst sigma-form residual " + detail_v::real8(worst) + " (tol 1e-8)", 0};
}

// 7. Hankel route vs direct quadrature vs matrix Monte Carlo at n <= 3, plus
//    the closed-form anchor at n = 1.
inline CheckResult criterion_oracle_triangle(const Options& opt) {
  const int digits = 60;
  const int windows = opt.fast ? 2 : 10;
  const long trials = opt.fast ? 20000 : 100000;
  detail_v::WindowGen gen(707);
  bool pass = true;
  Real worst_quad(0L, 30);
  double worst_mc_sigmas = 0;
  Real tol_quad = detail_v::scaled(pow10(-10, 20), opt);
  double mc_envelope = 4.4 * opt.tol_scale;

  for (int t = 0; t < windows; ++t) {
    for (int which = 0; which < 2; ++which) {
      int n = 1 + (t + which) % 3;
      WeightSpec w = which ? WeightSpec::laguerre(1.0) : WeightSpec::gaussian();
      Window win = which ? gen.lue_window(digits) : gen.gue_window(digits);
      Real hankel = gap_probability(build_from_moments(w, win, n, digits), n);
      Real quad = direct_quadrature_prob(w, n, win, 48, 50);
      Real qdev = abs(hankel - quad) / max(Real(1L, 20), abs(hankel));
      worst_quad = max(worst_quad, qdev);
      if (!(qdev < tol_quad)) pass = false;

      MCConfig cfg{trials, 900 + static_cast<std::uint64_t>(10 * t + which), n};
      auto est = mc_gap_probability(w, win, cfg);
      double p = hankel.to_double();
      double sd = std::sqrt(std::max(p * (1 - p), 1e-9) / trials);
      double sigmas = std::abs(est.p_hat.to_double() - p) / sd;
      worst_mc_sigmas = std::max(worst_mc_sigmas, sigmas);
      if (!(sigmas < mc_envelope)) pass = false;
    }
  }

  // Closed-form anchor: n = 1 on (-1,1) equals erf(1).
  Real q1 = direct_quadrature_prob(WeightSpec::gaussian(), 1, Window::of(-1.0, 1.0), 48, 60);
  Real anchor_dev = abs(q1 - erf(Real(1L, 70), 65));
  if (!(anchor_dev < detail_v::scaled(pow10(-20, 20), opt))) pass = false;

  std::ostringstream os;
  os << "worst quad deviation " << detail_v::real8(worst_quad) << ", worst MC pull "
     << worst_mc_sigmas << " sigma (envelope 4.4), closed-form anchor dev "
     << detail_v::real8(anchor_dev);
  return {"oracle-triangle", pass, os.str(), 0};
}

// 8. Edge profiles satisfy their sigma forms and the limiting PDEs; the two
//    Tracy-Widom routes agree.
inline CheckResult criterion_scaling_limits(const Options& opt) {
  Real tol = detail_v::scaled(pow10(-8, 20), opt);
  bool pass = true;
  Real worst_profile(0L, 30), worst_pde(0L, 30), worst_tw(0L, 30);

  static TracyWidomOde ode(-13.2, 40);
  std::vector<Real> grid8;
  for (int i = 0; i <= (opt.fast ? 4 : 8); ++i)
    grid8.push_back(Real(-8.0 + 16.0 * i / (opt.fast ? 4 : 8), 40));
  std::vector<Real> grid2;
  for (int i = 0; i <= 4; ++i) grid2.push_back(Real(-2.0 + i, 40));

  std::vector<ScalingSpec> specs;
  specs.push_back(ScalingSpec::gue(Real(1.0 / std::sqrt(2.0), 40), 8));
  if (!opt.fast) {
    specs.push_back(ScalingSpec::gue(Real(1L, 40), 8));
    specs.push_back(ScalingSpec::lue(Real(0.5, 40), Real(1L, 40), 8));
    specs.push_back(ScalingSpec::lue(Real(0.5, 40), Real(3L, 40), 8));
  }
  for (const auto& spec : specs) {
    auto lp = solve_edge_profiles(spec, grid8, grid8, ode, 30);
    worst_profile = max(worst_profile, max(lp.worst_f_residual, lp.worst_g_residual));
    if (!(lp.worst_f_residual < tol) || !(lp.worst_g_residual < tol)) pass = false;
    auto lp2 = solve_edge_profiles(spec, grid2, grid2, ode, 30);
    for (size_t i = 0; i < grid2.size(); ++i) {
      for (size_t j = 0; j < grid2.size(); ++j) {
        Real r = limiting_pde_residual(spec, lp2.f[i], lp2.g[j], grid2[i], grid2[j], 30).relative();
        worst_pde = max(worst_pde, r);
        if (!(r < tol)) pass = false;
      }
    }
  }

  int tw_points = opt.fast ? 6 : 21;
  for (int i = 0; i < tw_points; ++i) {
    Real s = Real(-6L, 40) + Real(10L, 40) * i / (tw_points - 1);
    Real dev = abs(ode.eval(s).f2 - tw_fredholm(s, 30, 96));
    worst_tw = max(worst_tw, dev);
    if (!(dev < tol)) pass = false;
  }

  return {"scaling-limits", pass,
          "worst sigma-form " + detail_v::real8(worst_profile) + ", limiting-pde " +
              detail_v::real8(worst_pde) + ", route disagreement " + detail_v::real8(worst_tw) +
              " (all tol 1e-8)",
          0};
}

// 9. Joint gap probability factorizes asymptotically; the scaled H approaches
//    f + g. Strict decrease along n = 4, 8, 16 (no rate asserted).
inline CheckResult criterion_independence(const Options& opt) {
  static TracyWidomOde ode(-13.2, 40);
  std::vector<Real> grid;
  for (int i = 0; i < 5; ++i) grid.push_back(Real(-2.0 + i, 40));
  // n >= 4 keeps the scaled Laguerre window inside the support at c = 1/2.
  std::vector<int> ns = opt.fast ? std::vector<int>{4, 8} : std::vector<int>{4, 8, 16};

  auto rep_g = independence_check(Ensemble::Gaussian, Real(1.0 / std::sqrt(2.0), 40), Real(0L, 40),
                                  ns, grid, grid, ode);
  auto rep_l = independence_check(Ensemble::Laguerre, Real(0.5, 40), Real(1L, 40), ns, grid, grid,
                                  ode);
  bool pass = rep_g.internal_decreasing && rep_g.h_deviation_decreasing &&
              rep_l.h_deviation_decreasing && rep_l.internal_decreasing;
  for (const auto& e : rep_g.entries) pass = pass && e.product_bound_ok;
  for (const auto& e : rep_l.entries) pass = pass && e.product_bound_ok;

  std::ostringstream os;
  os << "E(n) =";
  for (const auto& e : rep_g.entries) os << " " << e.E_internal.to_double();
  os << " (Gaussian, strictly decreasing), H-deviation =";
  for (const auto& e : rep_l.entries) os << " " << e.H_deviation.to_double();
  os << " (Laguerre, strictly decreasing)";
  return {"asymptotic-independence", pass, os.str(), 0};
}

inline std::vector<std::function<CheckResult(const Options&)>> all_criteria() {
  return {criterion_compatibility, criterion_construction, criterion_h_identities,
          criterion_master_pdes,   criterion_toda,         criterion_ode_reductions,
          criterion_oracle_triangle, criterion_scaling_limits, criterion_independence};
}

// Runs the whole suite, printing one line per criterion.
inline int run_suite(const Options& opt, std::ostream& out) {
  int failures = 0;
  for (auto& fn : all_criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = fn(opt);
    } catch (const std::exception& e) {
      r.name = "criterion";
      r.pass = false;
      r.detail = std::string("aborted: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail;
    if (opt.show_timing) out << "  (" << static_cast<int>(r.seconds * 1000) / 1000.0 << "s)";
    out << "\n";
    if (!r.pass) ++failures;
  }
  out << (failures == 0 ? "all criteria passed\n"
                        : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace gaplab::verify
