#include <doctest.h>

#include <numbers>

#include "quartet/point_parse.hpp"

using namespace quartet;

TEST_CASE("basic points") {
  CartanPoint z = parse_cartan_point("(1, 1, 0, 0)");
  CHECK(z[0] == Complex(1, 0));
  CHECK(z[3] == Complex(0, 0));

  z = parse_cartan_point("(sqrt2, i, i, i)");
  CHECK(std::abs(z[0] - std::sqrt(2.0)) < 1e-15);
  CHECK(z[1] == Complex(0, 1));

  z = parse_cartan_point("(-1, -i, 2i, 0)");
  CHECK(z[0] == Complex(-1, 0));
  CHECK(z[1] == Complex(0, -1));
  CHECK(z[2] == Complex(0, 2));
}

TEST_CASE("sums, products, fractions") {
  CartanPoint z = parse_cartan_point("(18, 11 - sqrt203 i, 7 + sqrt203 i, 0)");
  CHECK(std::abs(z[1] - Complex(11, -std::sqrt(203.0))) < 1e-14);
  CHECK(std::abs(z[2] - Complex(7, std::sqrt(203.0))) < 1e-14);

  z = parse_cartan_point("(7, 2 sqrt7 i, 2sqrt7 i, 0)");
  CHECK(std::abs(z[1] - Complex(0, 2 * std::sqrt(7.0))) < 1e-14);
  CHECK(std::abs(z[1] - z[2]) == 0.0);

  z = parse_cartan_point("(1, 1/2 + 0.518 i, 1/2 - 0.518 i, 0)");
  CHECK(std::abs(z[1] - Complex(0.5, 0.518)) < 1e-15);
}

TEST_CASE("exponentials and omega") {
  using std::numbers::pi;
  CartanPoint z = parse_cartan_point("(1, e^{pi i/3}, e^{2 pi i/3}, 0)");
  CHECK(std::abs(z[1] - std::polar(1.0, pi / 3)) < 1e-15);
  CHECK(std::abs(z[2] - std::polar(1.0, 2 * pi / 3)) < 1e-15);

  z = parse_cartan_point("(1, i, e^{-i pi/4}, e^{i pi/4})");
  CHECK(std::abs(z[2] - std::polar(1.0, -pi / 4)) < 1e-15);

  z = parse_cartan_point("(omega, omega omega, 1, 0)");
  CHECK(std::abs(z[0] - std::polar(1.0, 2 * pi / 3)) < 1e-15);
  CHECK(std::abs(z[1] - std::polar(1.0, -2 * pi / 3)) < 1e-15);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_cartan_point("(1, 2, 3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_point("1, 2, 3, 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_point("(1, 2, 3, 4) junk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_point("(1, 2, 3, sqrt)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_point("(1, 2, 3, e^{pi})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_point("(1, 2, 3, 4/0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_point("(1, 2, 3, )"), std::invalid_argument);
}
