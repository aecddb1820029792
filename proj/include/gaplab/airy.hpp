// Airy Ai and Ai' by the Maclaurin series, at arbitrary precision.
//
// Ai = c1 f - c2 g with f, g the two entire series solutions of y'' = x y.
// The series cancels catastrophically for x of moderate size (the summands
// grow like e^{+(2/3)|x|^{3/2}} while Ai decays like e^{-(2/3)x^{3/2}}), so
// the working precision carries a guard proportional to |x|^{3/2}.

#pragma once

#include <cmath>

#include "gaplab/special.hpp"

namespace gaplab {

struct AiryValues {
  Real ai, ai_prime;
};

inline AiryValues airy_ai_pair(const Real& x, int digits) {
  double xa = std::abs(x.to_double());
  const int guard = 24 + static_cast<int>(std::ceil(0.62 * std::pow(xa, 1.5)));
  const int wd = digits + guard;
  const mpfr_prec_t wp = bits_for_digits(wd);

  Real xw = x.rounded_to(wd);
  Real third = Real(1L, wd) / 3;
  Real c1_0 = pow(Real(3L, wd), -2 * third) / gamma_fn(2 * third, wd);
  Real c2_0 = pow(Real(3L, wd), -third) / gamma_fn(third, wd);
  if (xw.is_zero()) return {c1_0.rounded_to(digits), (-c2_0).rounded_to(digits)};
  Real x3 = xw * xw * xw;

  Real f(wp), fp(wp), g(wp), gp(wp);
  Real term_f(1L, wd);       // a_k x^{3k}
  Real term_g = xw;          // b_k x^{3k+1}
  f = term_f;
  g = term_g;
  fp = Real(0L, wd);         // sum 3k a_k x^{3k-1} = (1/x) sum 3k a_k x^{3k}
  gp = Real(1L, wd);         // sum (3k+1) b_k x^{3k}

  Real fp_acc(0L, wd);  // accumulates 3k a_k x^{3k}; divided by x at the end
  Real eps = pow10(-wd - 6, 20);
  for (long k = 0; k < 100000; ++k) {
    term_f = term_f * x3 / ((3 * k + 2) * (3 * k + 3));
    term_g = term_g * x3 / ((3 * k + 3) * (3 * k + 4));
    f += term_f;
    g += term_g;
    fp_acc += (3 * (k + 1)) * term_f;
    gp += (3 * k + 4) * term_g / xw;
    if (abs(term_f) < eps && abs(term_g) < eps && k > 2) break;
  }
  fp = fp_acc / xw;

  AiryValues v;
  v.ai = (c1_0 * f - c2_0 * g).rounded_to(digits);
  v.ai_prime = (c1_0 * fp - c2_0 * gp).rounded_to(digits);
  return v;
}

inline Real airy_ai(const Real& x, int digits) { return airy_ai_pair(x, digits).ai; }

}  // namespace gaplab
