// Weight specifications and truncated moments.
//
// Two weights are supported: the Gaussian weight e^{-x^2} on the whole line
// and the Laguerre weight x^alpha e^{-x} (alpha > 0) on the positive
// half-line. Windows may have explicit unbounded endpoints so that the
// classical whole-interval quantities are exact rather than approximated by
// large finite cutoffs.
//
// Moments mu_j(a,b) are computed by the integration-by-parts forward
// recurrences
//   Gaussian:  mu_{j+1} = [ j mu_{j-1} - (b^j e^{-b^2} - a^j e^{-a^2}) ] / 2
//   Laguerre:  mu_{j+1} = (j+1+alpha) mu_j + a^{j+1+alpha} e^{-a}
//                                          - b^{j+1+alpha} e^{-b}
// seeded by erf / the lower incomplete gamma. The recurrence is exact but
// loses relative accuracy when boundary terms cancel, so it runs with
// 2*m guard digits for a vector of length m+1.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaplab/special.hpp"

namespace gaplab {

enum class Ensemble { Gaussian, Laguerre };

struct WeightSpec {
  Ensemble kind = Ensemble::Gaussian;
  Real alpha;  // Laguerre only, must be > 0

  static WeightSpec gaussian() { return WeightSpec{Ensemble::Gaussian, Real(0L, 20)}; }
  static WeightSpec laguerre(const Real& alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("WeightSpec: Laguerre alpha must be > 0");
    return WeightSpec{Ensemble::Laguerre, alpha};
  }
  static WeightSpec laguerre(double alpha, int digits = 40) {
    return laguerre(Real(alpha, digits));
  }

  bool is_gaussian() const { return kind == Ensemble::Gaussian; }
  bool is_laguerre() const { return kind == Ensemble::Laguerre; }
  std::string name() const { return is_gaussian() ? "gaussian" : "laguerre"; }
};

// One window endpoint: either a finite abscissa or the end of the support
// (-inf / +inf for Gaussian, 0 / +inf for Laguerre).
struct Bound {
  bool finite = true;
  Real x;

  static Bound at(const Real& v) { return Bound{true, v}; }
  static Bound at(double v, int digits = 40) { return Bound{true, Real(v, digits)}; }
  static Bound support_edge() { return Bound{false, Real()}; }
};

struct Window {
  Bound lo, hi;

  static Window of(const Real& a, const Real& b) { return Window{Bound::at(a), Bound::at(b)}; }
  static Window of(double a, double b, int digits = 40) {
    return Window{Bound::at(a, digits), Bound::at(b, digits)};
  }
  static Window whole_support() { return Window{Bound::support_edge(), Bound::support_edge()}; }
  static Window lower_tail(const Real& b) { return Window{Bound::support_edge(), Bound::at(b)}; }
  static Window upper_tail(const Real& a) { return Window{Bound::at(a), Bound::support_edge()}; }

  bool is_whole_support() const { return !lo.finite && !hi.finite; }

  void validate(const WeightSpec& w) const {
    if (lo.finite && hi.finite && !(lo.x < hi.x))
      throw std::invalid_argument("Window: requires a < b");
    if (w.is_laguerre() && lo.finite && !(lo.x > 0))
      throw std::invalid_argument("Window: Laguerre requires a > 0");
    if ((lo.finite && !lo.x.is_finite()) || (hi.finite && !hi.x.is_finite()))
      throw std::invalid_argument("Window: endpoint not a finite number");
  }
};

inline bool in_support(const WeightSpec& w, const Real& x) {
  return w.is_gaussian() || x > 0;
}

inline Real weight_at(const WeightSpec& w, const Real& x, int digits) {
  if (!in_support(w, x)) throw std::domain_error("weight_at: x outside support");
  const int wd = digits + 8;
  Real xw = x.rounded_to(wd);
  Real r = w.is_gaussian() ? exp(-(xw * xw))
                           : exp(w.alpha.rounded_to(wd) * log(xw) - xw);
  return r.rounded_to(digits);
}

// v'(x) where v = -ln w: 2x for Gaussian, 1 - alpha/x for Laguerre.
inline Real v_prime(const WeightSpec& w, const Real& x) {
  return w.is_gaussian() ? 2 * x : 1 - w.alpha / x;
}

inline int required_digits(int n, const WeightSpec&) { return required_digits(n); }

namespace detail {

// b^p e^{-b} for the Laguerre boundary terms, 0 at the support edges.
inline Real laguerre_boundary(const Bound& e, const Real& p, int wd) {
  if (!e.finite) return Real(0L, wd);
  Real x = e.x.rounded_to(wd);
  return exp(p * log(x) - x);
}

// b^j e^{-b^2} for the Gaussian boundary terms, 0 at +-inf.
inline Real gaussian_boundary(const Bound& e, long j, int wd) {
  if (!e.finite) return Real(0L, wd);
  Real x = e.x.rounded_to(wd);
  return pow(x, j) * exp(-(x * x));
}

}  // namespace detail

// mu_0 .. mu_m on the window, each accurate to the requested digits.
inline std::vector<Real> moment_vector(const WeightSpec& w, const Window& win, int m, int digits) {
  if (m < 0) throw std::invalid_argument("moment_vector: m must be >= 0");
  win.validate(w);
  const int wd = digits + 2 * m + 16;
  std::vector<Real> mu;
  mu.reserve(m + 1);

  if (w.is_gaussian()) {
    Real erf_lo = win.lo.finite ? erf(win.lo.x, wd) : Real(-1L, wd);
    Real erf_hi = win.hi.finite ? erf(win.hi.x, wd) : Real(1L, wd);
    Real sq_pi = sqrt(pi(wd));
    mu.push_back(sq_pi / 2 * (erf_hi - erf_lo));
    if (m >= 1) {
      Real ea = win.lo.finite ? exp(-(win.lo.x.rounded_to(wd) * win.lo.x.rounded_to(wd)))
                              : Real(0L, wd);
      Real eb = win.hi.finite ? exp(-(win.hi.x.rounded_to(wd) * win.hi.x.rounded_to(wd)))
                              : Real(0L, wd);
      mu.push_back((ea - eb) / 2);
    }
    for (long j = 1; j < m; ++j) {
      Real bt = detail::gaussian_boundary(win.hi, j, wd) - detail::gaussian_boundary(win.lo, j, wd);
      mu.push_back((j * mu[j - 1] - bt) / 2);
    }
  } else {
    Real al = w.alpha.rounded_to(wd);
    Real g_lo = win.lo.finite ? lower_incomplete_gamma(al + 1, win.lo.x, wd) : Real(0L, wd);
    Real g_hi = win.hi.finite ? lower_incomplete_gamma(al + 1, win.hi.x, wd)
                              : gamma_fn(al + 1, wd);
    mu.push_back(g_hi - g_lo);
    for (long j = 0; j < m; ++j) {
      Real p = al + (j + 1);
      Real bt = detail::laguerre_boundary(win.lo, p, wd) - detail::laguerre_boundary(win.hi, p, wd);
      mu.push_back(p * mu[j] + bt);
    }
  }

  for (auto& v : mu) v = v.rounded_to(digits);
  return mu;
}

inline Real moment(const WeightSpec& w, const Window& win, int j, int digits) {
  if (j < 0) throw std::invalid_argument("moment: j must be >= 0");
  return moment_vector(w, win, j, digits)[j];
}

// Whole-interval norm h_n(I) of the monic orthogonal polynomials:
// sqrt(pi) n! / 2^n for Gaussian, n! Gamma(n+alpha+1) for Laguerre.
inline Real whole_interval_norm(const WeightSpec& w, int n, int digits) {
  if (n < 0) throw std::invalid_argument("whole_interval_norm: n must be >= 0");
  const int wd = digits + 10;
  Real fact(1L, wd);
  for (long k = 2; k <= n; ++k) fact = fact * k;
  Real r = w.is_gaussian()
               ? sqrt(pi(wd)) * fact / pow(Real(2L, wd), static_cast<long>(n))
               : fact * gamma_fn(w.alpha.rounded_to(wd) + (n + 1), wd);
  return r.rounded_to(digits);
}

inline Real log_whole_interval_norm(const WeightSpec& w, int n, int digits) {
  return log(whole_interval_norm(w, n, digits + 8)).rounded_to(digits);
}

}  // namespace gaplab
