#include <doctest.h>

#include <cmath>

#include "angleset/threshold.hpp"

using namespace angleset;

namespace {

AngleThreshold make_threshold(AngleSpec::Kind kind, const Rational& value) {
  return AngleThreshold(AngleSpec{kind, value});
}

}  // namespace

TEST_CASE("exact rails exist where cosines are rational") {
  CHECK(make_threshold(AngleSpec::Kind::PiThirdPlusC, Rational(0)).has_exact_cos());
  CHECK(make_threshold(AngleSpec::Kind::Degrees, Rational(90)).has_exact_cos());
  CHECK(make_threshold(AngleSpec::Kind::Degrees, Rational(45)).has_exact_cos());
  CHECK(make_threshold(AngleSpec::Kind::Degrees, Rational(30)).has_exact_cos());
  CHECK(make_threshold(AngleSpec::Kind::Degrees, Rational(180)).has_exact_cos());
  CHECK(!make_threshold(AngleSpec::Kind::Degrees, Rational(70)).has_exact_cos());
  CHECK(!make_threshold(AngleSpec::Kind::PiThirdPlusC, parse_decimal("0.01")).has_exact_cos());
  CHECK(!make_threshold(AngleSpec::Kind::Radians, Rational(3)).has_exact_cos());
}

TEST_CASE("right-angle decisions are exact") {
  auto ninety = make_threshold(AngleSpec::Kind::Degrees, Rational(90));
  // unit square corner: D = 0, a = b = 1
  CHECK(ninety.compare_cos(Rational(0), Rational(1), Rational(1)) == Cmp::Equal);
  CHECK(ninety.compare_angle(Rational(0), Rational(1), Rational(1)) == Cmp::Equal);
  // acute corner
  CHECK(ninety.compare_angle(Rational(1), Rational(1), Rational(2)) == Cmp::Less);
  // obtuse corner
  CHECK(ninety.compare_angle(Rational(-1), Rational(1), Rational(2)) == Cmp::Greater);
}

TEST_CASE("45-degree square rail hits exact equality") {
  auto spec45 = make_threshold(AngleSpec::Kind::Degrees, Rational(45));
  // triangle (0,0),(1,0),(1,1): apex at the origin, D = 1, a = 1, b = 2,
  // cos = 1/sqrt(2) exactly
  CHECK(spec45.compare_cos(Rational(1), Rational(1), Rational(2)) == Cmp::Equal);
  CHECK(spec45.compare_cos(Rational(2), Rational(2), Rational(4)) == Cmp::Equal);
  CHECK(spec45.compare_cos(Rational(1), Rational(1), Rational(3)) == Cmp::Less);  // cos 1/sqrt3
  auto spec135 = make_threshold(AngleSpec::Kind::Degrees, Rational(135));
  CHECK(spec135.compare_cos(Rational(-1), Rational(1), Rational(2)) == Cmp::Equal);
}

TEST_CASE("pi/3 rail separates the equilateral case") {
  auto third = make_threshold(AngleSpec::Kind::PiThirdPlusC, Rational(0));
  CHECK(third.cos_alpha() == 0.5);
  // equilateral: D = 1, a = b = 2 -> cos exactly 1/2
  CHECK(third.compare_cos(Rational(1), Rational(2), Rational(2)) == Cmp::Equal);
  CHECK(third.compare_angle(Rational(1), Rational(2), Rational(2)) == Cmp::Equal);

  auto shifted = make_threshold(AngleSpec::Kind::PiThirdPlusC, parse_decimal("0.01"));
  // the same equilateral angle is now strictly below the threshold
  CHECK(shifted.compare_angle(Rational(1), Rational(2), Rational(2)) == Cmp::Less);
}

TEST_CASE("irrational thresholds decide strictly distinct cosines") {
  // 1.0471975511965977 < pi/3, so an exact 60-degree angle exceeds it.
  auto nearly_third = make_threshold(AngleSpec::Kind::Radians, parse_decimal("1.0471975511965977"));
  CHECK(nearly_third.compare_angle(Rational(1), Rational(2), Rational(2)) == Cmp::Greater);
  // 1.0471975511965979 > pi/3.
  auto just_above = make_threshold(AngleSpec::Kind::Radians, parse_decimal("1.0471975511965979"));
  CHECK(just_above.compare_angle(Rational(1), Rational(2), Rational(2)) == Cmp::Less);

  auto seventy = make_threshold(AngleSpec::Kind::Degrees, Rational(70));
  // right angle vs 70 degrees
  CHECK(seventy.compare_angle(Rational(0), Rational(1), Rational(1)) == Cmp::Greater);
  // 60 degrees vs 70 degrees
  CHECK(seventy.compare_angle(Rational(1), Rational(2), Rational(2)) == Cmp::Less);
}

TEST_CASE("collinear degenerations give exact +-1 cosines") {
  auto anything = make_threshold(AngleSpec::Kind::Radians, Rational(3));
  // flat angle: D = -sqrt(ab) exactly, e.g. points (0),(1),(2) apex middle:
  // D = -1, a = b = 1
  CHECK(anything.compare_cos(Rational(-1), Rational(1), Rational(1)) == Cmp::Less);
  auto straight = make_threshold(AngleSpec::Kind::Degrees, Rational(180));
  CHECK(straight.compare_cos(Rational(-1), Rational(1), Rational(1)) == Cmp::Equal);
  CHECK(straight.compare_angle(Rational(-2), Rational(4), Rational(1)) == Cmp::Equal);
  // zero angle at an endpoint: D = +sqrt(ab)
  CHECK(straight.compare_angle(Rational(2), Rational(4), Rational(1)) == Cmp::Less);
}

TEST_CASE("threshold validation") {
  CHECK_THROWS_AS(make_threshold(AngleSpec::Kind::Degrees, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(make_threshold(AngleSpec::Kind::Degrees, Rational(181)), std::invalid_argument);
  CHECK_THROWS_AS(make_threshold(AngleSpec::Kind::Radians, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(make_threshold(AngleSpec::Kind::Radians, parse_decimal("3.1416")),
                  std::invalid_argument);
  CHECK_NOTHROW(make_threshold(AngleSpec::Kind::Radians, parse_decimal("3.1415")));
  CHECK_THROWS_AS(make_threshold(AngleSpec::Kind::PiThirdPlusC, Rational(-1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_threshold(AngleSpec::Kind::PiThirdPlusC, parse_decimal("2.2")),
                  std::invalid_argument);
  CHECK_NOTHROW(make_threshold(AngleSpec::Kind::PiThirdPlusC, Rational(2)));
}

TEST_CASE("alpha_radians and cos_alpha reporting") {
  const double pi = std::acos(-1.0);
  CHECK(make_threshold(AngleSpec::Kind::PiThirdPlusC, Rational(0)).alpha_radians() ==
        doctest::Approx(pi / 3).epsilon(1e-15));
  CHECK(make_threshold(AngleSpec::Kind::Degrees, Rational(90)).alpha_radians() ==
        doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(make_threshold(AngleSpec::Kind::Degrees, Rational(70)).cos_alpha() ==
        doctest::Approx(std::cos(70 * pi / 180)).epsilon(1e-14));
}

TEST_CASE("degenerate side lengths are rejected") {
  auto third = make_threshold(AngleSpec::Kind::PiThirdPlusC, Rational(0));
  CHECK_THROWS_AS(third.compare_cos(Rational(0), Rational(0), Rational(1)), std::invalid_argument);
}
