// Gap probabilities through the Hankel route.
//
// ln D_n(a,b) = sum_{j<n} ln h_j(a,b) and
// ln Prob(n,a,b) = sum_{j<n} [ ln h_j(a,b) - ln h_j(I) ],
// kept in the log domain throughout so large n cannot underflow.
//
// H_n is the windowed log-derivative of D_n:
//   Gaussian:  H_n = (d_a + d_b) ln D_n       = 2 p1(n)
//   Laguerre:  H_n = (a d_a + b d_b) ln D_n   = n(alpha+n) + p1(n)
// and is always produced algebraically from the stored p1, never by numerical
// differentiation; the ladder representations and finite differences serve as
// genuinely independent cross-checks of the same quantity.

#pragma once

#include <functional>
#include <future>
#include <thread>

#include "gaplab/io.hpp"
#include "gaplab/ladder.hpp"

#include <json.hpp>

namespace gaplab {

struct GapPoint {
  int n = 0;
  Window window;
  Real logD;
  Real logProb;
  Real H;
  Real p1;
};

struct GapSurface {
  WeightSpec weight;
  int n = 0;
  int digits = 0;
  std::vector<Real> a_grid;
  std::vector<Real> b_grid;
  std::vector<std::vector<GapPoint>> points;  // [i][j] for (a_grid[i], b_grid[j])
};

inline Real log_hankel_det(const OPSystem& sys, int n) {
  if (n < 1 || n > sys.n_max + 2) throw std::out_of_range("log_hankel_det: n out of range");
  Real s(0L, sys.digits_used);
  for (int j = 0; j < n; ++j) s += log(sys.h[j]);
  return s;
}

inline Real log_gap_probability(const OPSystem& sys, int n) {
  if (n < 1 || n > sys.n_max + 1) throw std::out_of_range("log_gap_probability: n out of range");
  const int wd = sys.digits_used;
  Real s(0L, wd);
  for (int j = 0; j < n; ++j) s += log(sys.h[j]) - log_whole_interval_norm(sys.weight, j, wd);
  return s;
}

inline Real gap_probability(const OPSystem& sys, int n) {
  return exp(log_gap_probability(sys, n));
}

inline Real H_of(const OPSystem& sys, int n) {
  if (n < 0 || n > sys.n_max + 1) throw std::out_of_range("H_of: n out of range");
  const int wd = sys.digits_used;
  if (sys.weight.is_gaussian()) return 2 * sys.p1[n];
  return Real(n, wd) * (sys.weight.alpha + n) + sys.p1[n];
}

inline GapPoint H_value(const OPSystem& sys, int n) {
  GapPoint p;
  p.n = n;
  p.window = sys.window;
  p.logD = log_hankel_det(sys, n);
  p.logProb = log_gap_probability(sys, n);
  p.H = H_of(sys, n);
  p.p1 = sys.p1[n];
  return p;
}

// H_n assembled from the boundary quantities alone, via the summed residues
// of the ladder coefficients. Independent of the p1 route.
inline Real gue_h_from_ladder(const OPSystem& sys, int n) {
  Real s(0L, sys.digits_used);
  for (int j = 0; j < n; ++j) {
    auto l = gue_ladder(sys, j);
    s -= l.R_a + l.R_b;
  }
  return s;
}

inline Real lue_h_from_ladder(const OPSystem& sys, int n) {
  const int wd = sys.digits_used;
  Real a = sys.window.lo.finite ? sys.window.lo.x.rounded_to(wd) : Real(0L, wd);
  Real b = sys.window.hi.finite ? sys.window.hi.x.rounded_to(wd) : Real(0L, wd);
  Real s(0L, wd);
  for (int j = 0; j < n; ++j) {
    auto l = lue_ladder(sys, j);
    s -= a * l.R_a + b * l.R_b;
  }
  return s;
}

// The fully eliminated degree-n representations (finite windows only; both
// endpoint residues enter through divisions).
inline Real gue_h_eliminated(const OPSystem& sys, int n) {
  auto l = gue_ladder(sys, n);
  Real a = sys.window.lo.x, b = sys.window.hi.x;
  Real beta_n = sys.beta[n];
  return 2 * a * l.r_a + 2 * b * l.r_b - 2 * l.r_a * l.r_a / l.R_a - 2 * l.r_b * l.r_b / l.R_b -
         2 * beta_n * (l.R_a + l.R_b);
}

inline Real lue_h_eliminated(const OPSystem& sys, int n) {
  auto l = lue_ladder(sys, n);
  Real a = sys.window.lo.x, b = sys.window.hi.x;
  Real al = sys.weight.alpha;
  Real beta_n = sys.beta[n];
  return (a - al - 2 * n) * l.r_a + (b - al - 2 * n) * l.r_b - 2 * l.r_a * l.r_b -
         beta_n * (l.R_a + l.R_b) - (l.r_a * l.r_a / l.R_a) * (1 - l.R_b) -
         (l.r_b * l.r_b / l.R_b) * (1 - l.R_a);
}

// ln Prob(n,a,b) rebuilt from H_n by integrating along the diagonal path
// (t, t + b - a) from t = 0 to t = a, plus the ln Prob at the path origin.
// Composite Gauss-Legendre in panels of 16 nodes; the node count doubles once
// and the two results must agree.
inline Real reconstruct_logprob(int n, const WeightSpec& w, const Real& a, const Real& b, int steps,
                                int digits) {
  if (!w.is_gaussian()) throw std::invalid_argument("reconstruct_logprob: Gaussian only");
  if (steps < 16) throw std::invalid_argument("reconstruct_logprob: steps must be >= 16");
  const int wd = digits + 8;
  Real width = (b - a).rounded_to(wd);
  auto integrand = [&](const Real& t) {
    auto sys = build_from_moments(w, Window{Bound::at(t), Bound::at(t + width)},
                                  std::max(1, n - 1), digits);
    return H_of(sys, n);
  };
  auto integrate = [&](int total_nodes) {
    int panels = std::max(1, total_nodes / 16);
    Real acc(0L, wd);
    Real zero(0L, wd);
    for (int p = 0; p < panels; ++p) {
      Real lo = zero + (a - zero) * p / panels;
      Real hi = zero + (a - zero) * (p + 1) / panels;
      acc += integrate_gl(integrand, lo, hi, 16, wd);
    }
    return acc;
  };
  Real coarse = integrate(steps);
  Real fine = integrate(2 * steps);
  if (abs(fine - coarse) > pow10(-digits / 2, 20) * max(Real(1L, 20), abs(fine)))
    throw std::runtime_error("reconstruct_logprob: quadrature did not converge");

  auto base = build_from_moments(w, Window{Bound::at(Real(0L, wd)), Bound::at(width)},
                                 std::max(1, n), digits);
  return fine + log_gap_probability(base, n);
}

namespace detail {

// Deterministic chunked parallel map over [0, count).
inline void parallel_for(int count, const std::function<void(int)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  int workers = std::max(1, std::min<int>(count, hw ? static_cast<int>(hw) : 2));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> futs;
  for (int wkr = 0; wkr < workers; ++wkr) {
    futs.push_back(std::async(std::launch::async, [&, wkr]() {
      for (int i = wkr; i < count; i += workers) body(i);
    }));
  }
  for (auto& f : futs) f.get();
}

}  // namespace detail

inline GapSurface surface(const WeightSpec& w, int n, const std::vector<Real>& a_grid,
                          const std::vector<Real>& b_grid, const PrecisionPolicy& policy) {
  for (size_t i = 1; i < a_grid.size(); ++i)
    if (!(a_grid[i - 1] < a_grid[i])) throw std::invalid_argument("surface: a_grid not increasing");
  for (size_t j = 1; j < b_grid.size(); ++j)
    if (!(b_grid[j - 1] < b_grid[j])) throw std::invalid_argument("surface: b_grid not increasing");

  GapSurface s;
  s.weight = w;
  s.n = n;
  s.digits = policy.digits;
  s.a_grid = a_grid;
  s.b_grid = b_grid;
  s.points.assign(a_grid.size(), std::vector<GapPoint>(b_grid.size()));

  const int rows = static_cast<int>(a_grid.size());
  const int cols = static_cast<int>(b_grid.size());
  std::vector<std::string> failures(rows * cols);
  detail::parallel_for(rows * cols, [&](int idx) {
    int i = idx / cols, j = idx % cols;
    try {
      Window win{Bound::at(a_grid[i]), Bound::at(b_grid[j])};
      auto sys = build_from_moments(w, win, std::max(1, n), policy);
      s.points[i][j] = H_value(sys, n);
    } catch (const std::exception& e) {
      failures[idx] = "node (a=" + a_grid[i].str(8) + ", b=" + b_grid[j].str(8) + "): " + e.what();
    }
  });
  for (const auto& f : failures)
    if (!f.empty()) throw std::runtime_error("surface: " + f);
  return s;
}

inline CsvTable surface_to_csv(const GapSurface& s) {
  CsvTable t;
  t.header = {"a", "b", "logD", "logProb", "H", "p1"};
  for (size_t i = 0; i < s.a_grid.size(); ++i) {
    for (size_t j = 0; j < s.b_grid.size(); ++j) {
      const GapPoint& p = s.points[i][j];
      t.rows.push_back({format_real(s.a_grid[i], s.digits), format_real(s.b_grid[j], s.digits),
                        format_real(p.logD, s.digits), format_real(p.logProb, s.digits),
                        format_real(p.H, s.digits), format_real(p.p1, s.digits)});
    }
  }
  return t;
}

inline nlohmann::json surface_to_json(const GapSurface& s) {
  nlohmann::json j;
  j["schema"] = "gaplab.surface.v1";
  j["ensemble"] = s.weight.name();
  if (s.weight.is_laguerre()) j["alpha"] = format_real(s.weight.alpha, s.digits);
  j["n"] = s.n;
  j["digits"] = s.digits;
  auto grid = [&](const std::vector<Real>& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : g) arr.push_back(format_real(x, s.digits));
    return arr;
  };
  j["a_grid"] = grid(s.a_grid);
  j["b_grid"] = grid(s.b_grid);
  nlohmann::json pts = nlohmann::json::array();
  for (size_t i = 0; i < s.a_grid.size(); ++i) {
    for (size_t jx = 0; jx < s.b_grid.size(); ++jx) {
      const GapPoint& p = s.points[i][jx];
      pts.push_back({{"a", format_real(s.a_grid[i], s.digits)},
                     {"b", format_real(s.b_grid[jx], s.digits)},
                     {"logD", format_real(p.logD, s.digits)},
                     {"logProb", format_real(p.logProb, s.digits)},
                     {"H", format_real(p.H, s.digits)},
                     {"p1", format_real(p.p1, s.digits)}});
    }
  }
  j["points"] = pts;
  return j;
}

}  // namespace gaplab
