// Gauss-Legendre rules at arbitrary precision. Nodes are Legendre roots
// refined by Newton iteration from double-precision starting guesses; rules
// are cached per (order, precision) since they are reused heavily by the
// Stieltjes construction, the quadrature oracles and the Fredholm solver.

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "gaplab/real.hpp"

namespace gaplab {

struct GaussLegendreRule {
  std::vector<Real> nodes;    // on (-1, 1), ascending
  std::vector<Real> weights;  // sum to 2
};

namespace detail {

inline GaussLegendreRule compute_gauss_legendre(int n, int digits) {
  const int wd = digits + 10;
  const mpfr_prec_t wp = bits_for_digits(wd);
  GaussLegendreRule rule;
  rule.nodes.assign(n, Real(wp));
  rule.weights.assign(n, Real(wp));

  const Real one(1L, wd);
  const Real tol = pow10(-wd + 2, 20);
  const double pi_d = 3.14159265358979323846;

  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real x(std::cos(pi_d * (i + 0.75) / (n + 0.5)), wd);
    Real pn(wp), dpn(wp);
    for (int it = 0; it < 200; ++it) {
      // Legendre recurrence up to degree n at x.
      Real p0 = one, p1 = x;
      for (int k = 1; k < n; ++k) {
        Real p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
      }
      pn = p1;
      dpn = n * (x * p1 - p0) / (x * x - one);
      Real dx = pn / dpn;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    // One more recurrence pass at the converged node for the weight.
    Real p0 = one, p1 = x;
    for (int k = 1; k < n; ++k) {
      Real p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
      p0 = p1;
      p1 = p2;
    }
    dpn = n * (x * p1 - p0) / (x * x - one);
    Real w = 2 / ((one - x * x) * dpn * dpn);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = Real(0L, wd);
  return rule;
}

}  // namespace detail

inline const GaussLegendreRule& gauss_legendre(int n, int digits) {
  static std::map<std::pair<int, int>, GaussLegendreRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, digits);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, detail::compute_gauss_legendre(n, digits)).first;
  return it->second;
}

// integral of f over (a, b) with an n-point rule
inline Real integrate_gl(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                         int n, int digits) {
  const auto& rule = gauss_legendre(n, digits);
  const int wd = digits + 10;
  Real mid = ((a + b) / 2).rounded_to(wd);
  Real half = ((b - a) / 2).rounded_to(wd);
  Real sum(bits_for_digits(wd));
  for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return (sum * half).rounded_to(digits);
}

}  // namespace gaplab
