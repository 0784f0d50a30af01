#include <doctest.h>

#include "quartet/poly.hpp"

using namespace quartet;
using Complex = std::complex<double>;

TEST_CASE("polynomial arithmetic and evaluation") {
  const RPoly x = RPoly::variable(2, 0);
  const RPoly y = RPoly::variable(2, 1);
  const RPoly p = (x + y) * (x - y);  // x^2 - y^2

  CHECK(p.term_count() == 2);
  CHECK(p.total_degree() == 2);
  const std::array<double, 2> pt = {3.0, 2.0};
  CHECK(p.eval(std::span<const double>(pt)) == doctest::Approx(5.0));

  const RPoly q = p.pow(3);
  CHECK(q.total_degree() == 6);
  CHECK(q.eval(std::span<const double>(pt)) == doctest::Approx(125.0));
}

TEST_CASE("derivative and substitution") {
  const RPoly x = RPoly::variable(2, 0);
  const RPoly y = RPoly::variable(2, 1);
  const RPoly p = 3.0 * x.pow(2) * y + y.pow(3);  // d/dx = 6xy, d/dy = 3x^2+3y^2

  const std::array<double, 2> pt = {2.0, -1.0};
  CHECK(p.derivative(0).eval(std::span<const double>(pt)) == doctest::Approx(-12.0));
  CHECK(p.derivative(1).eval(std::span<const double>(pt)) == doctest::Approx(15.0));

  const RPoly fixed = p.set_to_one(0);  // 3y + y^3
  const std::array<double, 2> pt2 = {99.0, 2.0};
  CHECK(fixed.eval(std::span<const double>(pt2)) == doctest::Approx(14.0));
}

TEST_CASE("cancellation removes terms") {
  const RPoly x = RPoly::variable(1, 0);
  RPoly p = x.pow(2) - x.pow(2);
  CHECK(p.is_zero());
  p += x;
  p -= x;
  CHECK(p.is_zero());
}

TEST_CASE("real and imaginary parts of a complex polynomial") {
  // f = z1^2 + z1 z2: Re = x1^2 - y1^2 + x1 x2 - y1 y2, Im = 2 x1 y1 + x1 y2 + x2 y1
  CPoly f = CPoly::variable(2, 0).pow(2) + CPoly::variable(2, 0) * CPoly::variable(2, 1);
  const auto [re, im] = real_imag_parts(f);
  CHECK(re.nvars() == 4);

  const Complex z1(0.3, -1.2), z2(0.8, 0.5);
  const Complex direct = z1 * z1 + z1 * z2;
  const std::array<double, 4> xy = {z1.real(), z1.imag(), z2.real(), z2.imag()};
  CHECK(re.eval(std::span<const double>(xy)) == doctest::Approx(direct.real()));
  CHECK(im.eval(std::span<const double>(xy)) == doctest::Approx(direct.imag()));
}
