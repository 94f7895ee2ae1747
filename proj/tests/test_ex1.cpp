#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace dimgroup;
using ex1::Class;
using ex1::Element;
using ex1::GeneratorMode;
using ex1::Group;

namespace {

const ScalarField& F() { return ScalarField::standard(); }
TScalar t() { return t_power(1); }

}  // namespace

TEST_CASE("ex1 coordinates examples") {
  Group g = Group::standard(2, GeneratorMode::StdPlusE);
  CHECK(g.rank() == 3);
  auto e1 = ex1::coordinates(g, Element{{1, 0, 0}});
  CHECK(e1 == std::vector<TScalar>{TScalar(Rational(1)), TScalar()});
  CHECK(ex1::coordinates(g, Element{{0, 0, 1}}) == std::vector<TScalar>{t(), t() * t()});
  CHECK(ex1::coordinates(g, Element{{0, 0, 0}}) == std::vector<TScalar>{TScalar(), TScalar()});

  Group u = Group::standard(2, GeneratorMode::UnitPlusE);
  CHECK(u.rank() == 2);
  CHECK(ex1::coordinates(u, Element{{3, -2}}) ==
        std::vector<TScalar>{TScalar(Rational(3)) - t().scaled(2), TScalar(Rational(3)) - (t() * t()).scaled(2)});
}

TEST_CASE("ex1 classify examples") {
  Group g = Group::standard(2, GeneratorMode::StdPlusE);
  CHECK(ex1::classify(F(), g, Element{{0, 0, 0}}) == Class::Zero);
  CHECK(ex1::classify(F(), g, Element{{0, 0, 1}}) == Class::Positive);
  CHECK(ex1::classify(F(), g, Element{{1, 0, 0}}) == Class::Boundary);
  CHECK(ex1::classify(F(), g, Element{{0, 0, -1}}) == Class::Negative);
  CHECK(ex1::classify(F(), g, Element{{1, -1, 0}}) == Class::Mixed);
  CHECK_THROWS_AS(ex1::classify(F(), g, Element{{1, 0}}), PreconditionViolated);
}

TEST_CASE("ex1 scan examples") {
  auto w = ex1::extreme_simplicity_scan(F(), Group::standard(2, GeneratorMode::StdPlusE), 1);
  REQUIRE(w);
  CHECK(w->coeffs == std::vector<std::int64_t>{1, 0, 0});
  CHECK_FALSE(ex1::extreme_simplicity_scan(F(), Group::standard(2, GeneratorMode::UnitPlusE), 5));
  CHECK_FALSE(ex1::extreme_simplicity_scan(F(), Group::standard(1, GeneratorMode::StdPlusE), 5));
}

TEST_CASE("ex1 groups reject rational alphas and bad modes") {
  CHECK_THROWS_AS(Group({TScalar(Rational(1, 2))}, GeneratorMode::StdPlusE), PreconditionViolated);
  CHECK(ex1::parse_mode("unit") == GeneratorMode::UnitPlusE);
  CHECK(ex1::parse_mode("STD_PLUS_E") == GeneratorMode::StdPlusE);
  CHECK_THROWS_AS(ex1::parse_mode("nope"), ParseError);
}

TEST_CASE("ex1 enumeration visits every element of the box exactly once") {
  Group g = Group::standard(2, GeneratorMode::StdPlusE);
  std::set<std::vector<std::int64_t>> seen;
  ex1::for_each_element(g, 2, [&](const Element& e) {
    CHECK(seen.insert(e.coeffs).second);
    return false;
  });
  CHECK(seen.size() == 5 * 5 * 5 - 1);
}

TEST_CASE("property: unit mode never produces boundary elements") {
  Group u = Group::standard(3, GeneratorMode::UnitPlusE);
  ex1::for_each_element(u, 6, [&](const Element& e) {
    REQUIRE(ex1::classify(F(), u, e) != Class::Boundary);
    REQUIRE(ex1::classify(F(), u, e) != Class::Zero);
    return false;
  });
}

TEST_CASE("property: positive elements dominate a multiple of any element") {
  Group g = Group::standard(2, GeneratorMode::UnitPlusE);
  SeededRng rng(31);
  Element pos{{1, 0}};
  for (int i = 0; i < 30; ++i) {
    Element h{{rng.uniform_int(-9, 9), rng.uniform_int(-9, 9)}};
    Integer n = ex1::dominating_multiple(F(), g, pos, h);
    Element diff{{n.get_si() - h.coeffs[0], -h.coeffs[1]}};
    REQUIRE(ex1::classify(F(), g, diff) == Class::Positive);
  }
}

TEST_CASE("nearest element search moves toward the target") {
  Group g = Group::standard(2, GeneratorMode::StdPlusE);
  auto [e, d] = ex1::nearest_element(F(), g, {make_rational(1, 3), make_rational(1, 5)}, 6);
  CHECK(d < make_rational(1, 3));
  auto [e2, d2] = ex1::nearest_element(F(), g, {make_rational(1, 3), make_rational(1, 5)}, 12);
  CHECK(d2 <= d);
}
