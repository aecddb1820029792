// Arbitrary-precision real arithmetic built on MPFR.
//
// Every Real carries its own mantissa precision. Binary operations round to
// the wider of the two operand precisions; mixing with int/double keeps the
// Real operand's precision. Precision is always requested explicitly in
// decimal digits at the point where a value enters the computation, so there
// is no ambient precision state to configure.

#pragma once

#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaplab {

inline mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) digits = 1;
  // log2(10) = 3.3219..., plus headroom for rounding noise in long chains.
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 24.0);
}

class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }

  explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

  Real(long v, int digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_si(v_, v, MPFR_RNDN);
  }

  Real(int v, int digits) : Real(static_cast<long>(v), digits) {}

  Real(double v, int digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_d(v_, v, MPFR_RNDN);
  }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  static Real parse(const std::string& s, int digits) {
    Real r(bits_for_digits(digits));
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("Real::parse: not a number: " + s);
    return r;
  }

  static Real pos_inf(int digits = 20) {
    Real r(bits_for_digits(digits));
    mpfr_set_inf(r.v_, 1);
    return r;
  }

  static Real neg_inf(int digits = 20) {
    Real r(bits_for_digits(digits));
    mpfr_set_inf(r.v_, -1);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal string with the given number of significant figures.
  std::string str(int sig = 20) const {
    if (sig < 2) sig = 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", sig, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  // Round a copy to a (usually lower) target precision.
  Real rounded_to(int digits) const {
    Real r(bits_for_digits(digits));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // ---- arithmetic -------------------------------------------------------

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define GAPLAB_BINOP(op, fn, fn_si, fn_d)                          \
  friend Real operator op(const Real& a, const Real& b) {          \
    Real r(std::max(a.prec(), b.prec()));                          \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                               \
    return r;                                                      \
  }                                                                \
  friend Real operator op(const Real& a, long b) {                 \
    Real r(a.prec());                                              \
    fn_si(r.v_, a.v_, b, MPFR_RNDN);                               \
    return r;                                                      \
  }                                                                \
  friend Real operator op(const Real& a, int b) { return a op static_cast<long>(b); } \
  friend Real operator op(const Real& a, double b) {               \
    Real r(a.prec());                                              \
    fn_d(r.v_, a.v_, b, MPFR_RNDN);                                \
    return r;                                                      \
  }

  GAPLAB_BINOP(+, mpfr_add, mpfr_add_si, mpfr_add_d)
  GAPLAB_BINOP(-, mpfr_sub, mpfr_sub_si, mpfr_sub_d)
  GAPLAB_BINOP(*, mpfr_mul, mpfr_mul_si, mpfr_mul_d)
  GAPLAB_BINOP(/, mpfr_div, mpfr_div_si, mpfr_div_d)
#undef GAPLAB_BINOP

  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator+(int a, const Real& b) { return b + static_cast<long>(a); }
  friend Real operator+(double a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator*(int a, const Real& b) { return b * static_cast<long>(a); }
  friend Real operator*(double a, const Real& b) { return b * a; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
  friend Real operator-(double a, const Real& b) {
    Real r(b.prec());
    mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }
  friend Real operator/(double a, const Real& b) {
    Real r(b.prec());
    mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { *this = *this + o; return *this; }
  Real& operator-=(const Real& o) { *this = *this - o; return *this; }
  Real& operator*=(const Real& o) { *this = *this * o; return *this; }
  Real& operator/=(const Real& o) { *this = *this / o; return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const Real& a, int b) { return a < static_cast<long>(b); }
  friend bool operator>(const Real& a, int b) { return a > static_cast<long>(b); }
  friend bool operator<=(const Real& a, int b) { return a <= static_cast<long>(b); }
  friend bool operator>=(const Real& a, int b) { return a >= static_cast<long>(b); }
  friend bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

 private:
  mpfr_t v_;
};

// ---- elementary functions ------------------------------------------------

#define GAPLAB_UNARY(name, fn)              \
  inline Real name(const Real& a) {         \
    Real r(a.prec());                       \
    fn(r.raw(), a.raw(), MPFR_RNDN);        \
    return r;                               \
  }

GAPLAB_UNARY(abs, mpfr_abs)
GAPLAB_UNARY(sqrt, mpfr_sqrt)
GAPLAB_UNARY(exp, mpfr_exp)
GAPLAB_UNARY(log, mpfr_log)
#undef GAPLAB_UNARY

inline Real pow(const Real& a, long e) {
  Real r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

inline Real pow(const Real& a, const Real& e) {
  Real r(std::max(a.prec(), e.prec()));
  mpfr_pow(r.raw(), a.raw(), e.raw(), MPFR_RNDN);
  return r;
}

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

inline Real pi(int digits) {
  Real r(bits_for_digits(digits));
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

// 10^e at modest precision; handy for tolerances.
inline Real pow10(long e, int digits = 20) {
  Real r(bits_for_digits(digits));
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

// Reference implementations straight from MPFR. The project computes its own
// special functions by series; these serve as independent cross-checks.
namespace refimpl {

inline Real erf(const Real& x) {
  Real r(x.prec());
  mpfr_erf(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline Real upper_gamma(const Real& s, const Real& x) {
  Real r(std::max(s.prec(), x.prec()));
  mpfr_gamma_inc(r.raw(), s.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline Real airy_ai(const Real& x) {
  Real r(x.prec());
  mpfr_ai(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace refimpl

}  // namespace gaplab
