// Monic orthogonal polynomials on a window, built by two independent routes:
//
//  * build_from_moments: LDL^T factorization of the Hankel moment matrix.
//    The pivots are the squared norms h_k, the factor's first sub-diagonal
//    carries the sub-leading coefficients, and D_n(a,b) = prod_{j<n} h_j.
//    Exact but exponentially ill-conditioned in n, hence the precision
//    escalation retry loop.
//
//  * build_by_quadrature: discretized Stieltjes procedure with inner products
//    taken by Gauss-Legendre quadrature on the window. Stable at moderate
//    precision; only valid for finite windows.
//
// Disagreement between the routes is the built-in error detector used by the
// cross-validation tests.

#pragma once

#include <stdexcept>
#include <vector>

#include "gaplab/quadrature.hpp"
#include "gaplab/weights.hpp"

namespace gaplab {

class IllConditionedError : public std::runtime_error {
 public:
  IllConditionedError(int index, int digits)
      : std::runtime_error("moment matrix factorization lost positivity at pivot " +
                           std::to_string(index) + " (digits=" + std::to_string(digits) + ")"),
        pivot_index(index),
        digits_used(digits) {}
  int pivot_index;
  int digits_used;
};

// Recurrence data for P_0 .. P_{n_max+1}:
//   z P_k = P_{k+1} + alpha_k P_k + beta_k P_{k-1},   P_0 = 1, beta_0 P_{-1} = 0.
//
// Stored fields:
//   h[k]     squared norms, k = 0 .. n_max+1          (pivots; all > 0)
//   alpha[k] k = 0 .. n_max
//   beta[k]  k = 1 .. n_max+1, beta[0] unused = 0     (beta_k = h_k / h_{k-1})
//   p1[k]    sub-leading coefficient of P_k, k = 0 .. n_max+1, p1[0] = 0
//            (accumulated through p1(k+1) = p1(k) - alpha_k)
//   pa[k], pb[k]  P_k at the window endpoints, k = 0 .. n_max+1; absent for
//            unbounded endpoints, where every boundary quantity vanishes.
struct OPSystem {
  WeightSpec weight;
  Window window;
  int n_max = 0;
  std::vector<Real> h;
  std::vector<Real> alpha;
  std::vector<Real> beta;
  std::vector<Real> p1;
  std::vector<Real> pa;
  std::vector<Real> pb;
  int digits_used = 0;

  // P_k(x) by the three-term recurrence.
  Real eval_monic(int k, const Real& x) const {
    if (k < 0 || k > n_max + 1) throw std::out_of_range("eval_monic: k out of range");
    Real p_prev(0L, digits_used);
    Real p = Real(1L, digits_used).rounded_to(digits_used);
    for (int j = 0; j < k; ++j) {
      Real p_next = (x - alpha[j]) * p - (j > 0 ? beta[j] * p_prev : Real(0L, digits_used));
      p_prev = p;
      p = p_next;
    }
    return p;
  }
};

namespace detail {

inline void fill_endpoint_values(OPSystem& sys) {
  const int m = sys.n_max + 2;
  const int wd = sys.digits_used;
  auto eval_all = [&](const Bound& e) {
    std::vector<Real> vals;
    if (!e.finite) return vals;
    vals.assign(m, Real(0L, wd));
    Real x = e.x.rounded_to(wd + 10);
    vals[0] = Real(1L, wd);
    for (int k = 0; k + 1 < m; ++k) {
      Real prev = k > 0 ? vals[k - 1] : Real(0L, wd);
      vals[k + 1] = (x - sys.alpha[k]) * vals[k] - (k > 0 ? sys.beta[k] * prev : Real(0L, wd));
    }
    return vals;
  };
  sys.pa = eval_all(sys.window.lo);
  sys.pb = eval_all(sys.window.hi);
}

inline void accumulate_p1(OPSystem& sys) {
  const int m = sys.n_max + 2;
  sys.p1.assign(m, Real(0L, sys.digits_used));
  for (int k = 0; k + 1 < m; ++k) sys.p1[k + 1] = sys.p1[k] - sys.alpha[k];
}

// One LDL^T attempt at a fixed working precision. Returns the failing pivot
// index, or -1 on success.
inline int try_moment_factorization(const WeightSpec& w, const Window& win, int n_max, int digits,
                                    OPSystem& out) {
  const int m = n_max + 2;
  // Constant guard only: detecting a lost pivot at the requested precision is
  // what drives the escalation loop. The moment recurrence guards itself.
  const int wd = digits + 16;
  std::vector<Real> mu = moment_vector(w, win, 2 * m - 2, wd);

  // Row-by-row LDL^T of M[i][j] = mu[i+j]; L unit lower triangular, d pivots.
  std::vector<std::vector<Real>> L(m);
  std::vector<Real> d(m, Real(0L, wd));
  for (int i = 0; i < m; ++i) L[i].assign(i + 1, Real(0L, wd));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      Real s = mu[i + j].rounded_to(wd);
      for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * d[k];
      if (j == i) {
        if (!(s > 0)) return i;
        d[i] = s;
        L[i][i] = Real(1L, wd);
      } else {
        L[i][j] = s / d[j];
      }
    }
  }

  out.weight = w;
  out.window = win;
  out.n_max = n_max;
  out.digits_used = digits;
  out.h.assign(m, Real(0L, digits));
  out.alpha.assign(n_max + 1, Real(0L, digits));
  out.beta.assign(m, Real(0L, digits));
  for (int k = 0; k < m; ++k) out.h[k] = d[k].rounded_to(digits + 10);
  // alpha_k = L[k+1][k] - L[k][k-1]; the sub-diagonal accumulates -p1.
  for (int k = 0; k <= n_max; ++k) {
    Real sub_hi = L[k + 1][k];
    Real sub_lo = k > 0 ? L[k][k - 1] : Real(0L, wd);
    out.alpha[k] = (sub_hi - sub_lo).rounded_to(digits + 10);
  }
  for (int k = 1; k < m; ++k) out.beta[k] = (d[k] / d[k - 1]).rounded_to(digits + 10);
  accumulate_p1(out);
  fill_endpoint_values(out);
  return -1;
}

}  // namespace detail

inline OPSystem build_from_moments(const WeightSpec& w, const Window& win, int n_max,
                                   const PrecisionPolicy& policy) {
  if (n_max < 1) throw std::invalid_argument("build_from_moments: n_max must be >= 1");
  policy.validate();
  win.validate(w);
  int digits = policy.digits;
  int last_bad = -1;
  for (int attempt = 0; attempt <= (policy.auto_escalate ? policy.max_escalations : 0); ++attempt) {
    OPSystem sys;
    int bad = detail::try_moment_factorization(w, win, n_max, digits, sys);
    if (bad < 0) return sys;
    last_bad = bad;
    digits *= 2;
  }
  throw IllConditionedError(last_bad, digits / 2);
}

inline OPSystem build_from_moments(const WeightSpec& w, const Window& win, int n_max, int digits) {
  PrecisionPolicy policy;
  policy.digits = digits;
  return build_from_moments(w, win, n_max, policy);
}

// Stieltjes procedure on a Gauss-Legendre discretization of the window.
// With check_nodes, the run is repeated at twice the node count and any
// disagreement beyond 10^(-digits/3) is reported as an insufficient rule.
inline OPSystem build_by_quadrature(const WeightSpec& w, const Window& win, int n_max, int nodes,
                                    int digits, bool check_nodes);

inline OPSystem build_by_quadrature(const WeightSpec& w, const Window& win, int n_max, int nodes,
                                    int digits) {
  if (n_max < 0) throw std::invalid_argument("build_by_quadrature: n_max must be >= 0");
  if (nodes < 4 * n_max) throw std::invalid_argument("build_by_quadrature: needs nodes >= 4*n_max");
  win.validate(w);
  if (!win.lo.finite || !win.hi.finite)
    throw std::invalid_argument("build_by_quadrature: finite window required");

  const int wd = digits + 18;
  const mpfr_prec_t wp = bits_for_digits(wd);
  const auto& rule = gauss_legendre(nodes, wd);
  Real mid = ((win.lo.x + win.hi.x) / 2).rounded_to(wd);
  Real half = ((win.hi.x - win.lo.x) / 2).rounded_to(wd);

  std::vector<Real> x(nodes, Real(wp)), wt(nodes, Real(wp));
  for (int i = 0; i < nodes; ++i) {
    x[i] = mid + half * rule.nodes[i];
    wt[i] = rule.weights[i] * half * weight_at(w, x[i], wd);
  }

  OPSystem sys;
  sys.weight = w;
  sys.window = win;
  sys.n_max = n_max;
  sys.digits_used = digits;
  const int m = n_max + 2;
  sys.h.assign(m, Real(0L, wd));
  sys.alpha.assign(n_max + 1, Real(0L, wd));
  sys.beta.assign(m, Real(0L, wd));

  std::vector<Real> p_prev(nodes, Real(0L, wd)), p(nodes, Real(1L, wd));
  for (int k = 0; k < m; ++k) {
    Real hk(0L, wd), xk(0L, wd);
    for (int i = 0; i < nodes; ++i) {
      Real pp = p[i] * p[i] * wt[i];
      hk += pp;
      xk += x[i] * pp;
    }
    sys.h[k] = hk;
    if (k > 0) sys.beta[k] = sys.h[k] / sys.h[k - 1];
    if (k <= n_max) {
      sys.alpha[k] = xk / hk;
      std::vector<Real> p_next(nodes, Real(wp));
      for (int i = 0; i < nodes; ++i) {
        p_next[i] = (x[i] - sys.alpha[k]) * p[i] -
                    (k > 0 ? sys.beta[k] * p_prev[i] : Real(0L, wd));
      }
      p_prev = std::move(p);
      p = std::move(p_next);
    }
  }
  for (auto& v : sys.h) v = v.rounded_to(digits + 10);
  for (auto& v : sys.alpha) v = v.rounded_to(digits + 10);
  for (auto& v : sys.beta) v = v.rounded_to(digits + 10);
  detail::accumulate_p1(sys);
  detail::fill_endpoint_values(sys);
  return sys;
}

inline OPSystem build_by_quadrature(const WeightSpec& w, const Window& win, int n_max, int nodes,
                                    int digits, bool check_nodes) {
  OPSystem coarse = build_by_quadrature(w, win, n_max, nodes, digits);
  if (!check_nodes) return coarse;
  OPSystem fine = build_by_quadrature(w, win, n_max, 2 * nodes, digits);
  Real tol = pow10(-digits / 3, 20);
  for (int k = 0; k <= n_max; ++k) {
    auto dev = [](const Real& x, const Real& y) {
      return abs(x - y) / max(Real(1L, 20), max(abs(x), abs(y)));
    };
    Real worst = max(dev(coarse.h[k], fine.h[k]), dev(coarse.alpha[k], fine.alpha[k]));
    if (k >= 1) worst = max(worst, dev(coarse.beta[k], fine.beta[k]));
    if (!(worst < tol))
      throw std::runtime_error(
          "build_by_quadrature: insufficient nodes (doubled-node disagreement at degree " +
          std::to_string(k) + ")");
  }
  return fine;
}

inline Real eval_monic(const OPSystem& sys, int k, const Real& x) { return sys.eval_monic(k, x); }

}  // namespace gaplab
