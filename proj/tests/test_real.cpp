#include <catch2/catch_amalgamated.hpp>

#include "gaplab/real.hpp"

using gaplab::Real;

TEST_CASE("Real basic arithmetic and precision propagation") {
  Real a(2L, 60);
  Real b(3L, 120);
  Real c = a / b;
  CHECK(c.prec() == gaplab::bits_for_digits(120));
  CHECK(std::abs(c.to_double() - 2.0 / 3.0) < 1e-15);

  Real x = Real::parse("1.5", 60);
  CHECK(x == Real(1.5, 60));
  CHECK((x * 2) == 3L);
  CHECK((1 - x) == Real(-0.5, 60));
}

TEST_CASE("Real string round trip keeps requested figures") {
  Real third = Real(1L, 80) / 3;
  std::string s = third.str(30);
  Real back = Real::parse(s, 80);
  CHECK(gaplab::abs(back - third) < gaplab::pow10(-28));
}

TEST_CASE("Real infinities") {
  Real inf = Real::pos_inf();
  CHECK(inf.is_inf());
  CHECK(inf > Real(1e300, 20));
  CHECK((-inf).sign() < 0);
  CHECK(gaplab::exp(-(inf * inf)).is_zero());
}

TEST_CASE("pi matches reference digits") {
  // First 35 digits of pi.
  Real ref = Real::parse("3.1415926535897932384626433832795029", 40);
  CHECK(gaplab::abs(gaplab::pi(40) - ref) < gaplab::pow10(-33));
}
