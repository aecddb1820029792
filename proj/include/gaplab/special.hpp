// Base special functions for truncated-weight moments, computed by series so
// that any requested precision is honored: the lower incomplete gamma via the
// Kummer-type series (all terms positive, no cancellation) and erf reduced to
// it through erf(x) = sgn(x) * gamma_lower(1/2, x^2) / sqrt(pi).

#pragma once

#include <stdexcept>

#include "gaplab/real.hpp"

namespace gaplab {

struct PrecisionPolicy {
  int digits = 50;
  bool auto_escalate = true;
  int max_escalations = 4;

  void validate() const {
    if (digits < 30) throw std::invalid_argument("PrecisionPolicy: digits must be >= 30");
  }
};

// Working-precision heuristic used as the starting point for moment-matrix
// factorizations; the matrices are exponentially ill-conditioned in n.
inline int required_digits(int n) {
  if (n < 1) throw std::invalid_argument("required_digits: n must be >= 1");
  return std::max(50, 12 * n);
}

inline Real gamma_fn(const Real& s, int digits) {
  if (s <= 0) throw std::invalid_argument("gamma_fn: s must be positive");
  Real r(bits_for_digits(digits + 8));
  mpfr_gamma(r.raw(), s.raw(), MPFR_RNDN);
  return r.rounded_to(digits);
}

// gamma_lower(s, x) = integral of t^{s-1} e^{-t} over (0, x).
//
// Series: x^s e^{-x} * sum_k x^k / (s (s+1) ... (s+k)). Terms are positive,
// so the working precision only needs a fixed guard on top of the request.
inline Real lower_incomplete_gamma(const Real& s, const Real& x, int digits) {
  if (s <= 0) throw std::invalid_argument("lower_incomplete_gamma: s must be positive");
  if (x.is_nan() || x < 0) throw std::domain_error("lower_incomplete_gamma: x must be >= 0");
  if (x.is_inf()) return gamma_fn(s, digits);

  const int wd = digits + 12;
  const mpfr_prec_t wp = bits_for_digits(wd);
  Real sw = s.rounded_to(wd);
  Real xw = x.rounded_to(wd);
  if (xw.is_zero()) return Real(0L, digits);

  Real term = 1 / sw;
  Real sum = term;
  Real eps = pow10(-wd, 20);
  for (long k = 1; k < 1000000; ++k) {
    term = term * xw / (sw + k);
    sum += term;
    if (term < eps * sum) break;
  }
  Real prefix(wp);
  // x^s e^{-x}
  prefix = exp(sw * log(xw) - xw);
  return (prefix * sum).rounded_to(digits);
}

inline Real erf(const Real& x, int digits) {
  if (digits < 30) throw std::invalid_argument("erf: digits must be >= 30");
  if (x.is_nan()) throw std::domain_error("erf: nan argument");
  const int wd = digits + 10;
  if (x.is_inf()) return Real(x.sign() > 0 ? 1L : -1L, digits);
  if (x.is_zero()) return Real(0L, digits);
  Real xw = x.rounded_to(wd);
  Real g = lower_incomplete_gamma(Real(1L, wd) / 2, xw * xw, wd);
  Real r = g / sqrt(pi(wd));
  if (x.sign() < 0) r = -r;
  return r.rounded_to(digits);
}

}  // namespace gaplab
