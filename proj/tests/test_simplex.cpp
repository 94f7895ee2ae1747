#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dimgroup;
using simplex::Class;
using simplex::Element;
using simplex::Spec;

namespace {

const ScalarField& F() { return ScalarField::standard(); }
TScalar t() { return t_power(1); }
TScalar c(long p, long q = 1) { return TScalar(make_rational(p, q)); }
RationalVector rv(std::vector<long> v) { return RationalVector(v.begin(), v.end()); }

simplex::State two_point() { return simplex::build(Spec::with_default_schedule(2, {rv({1, 1}), rv({1, 0})})); }

Element el(std::vector<long> q) { return Element(std::vector<Rational>(q.begin(), q.end())); }

}  // namespace

TEST_CASE("build examples") {
  auto trivial = simplex::build(Spec::with_default_schedule(1, {rv({1})}));
  CHECK(trivial.stages() == 0);
  CHECK(simplex::trace(trivial, el({5}), 0) == c(5));

  auto s = two_point();
  CHECK(s.lambda(1) == t());
  CHECK(s.v(1, 0) == c(1) - t());
  CHECK(s.v(1, 1) == -t());
  CHECK(s.span(1).rank() == 1);
  CHECK(s.span(1).contains(s.coordinates(c(1))));
  CHECK_FALSE(s.span(1).contains(s.coordinates(t())));

  CHECK_THROWS_AS(simplex::build(Spec::with_default_schedule(2, {rv({1, 1}), rv({2, 2})})), DependentBasis);
  CHECK_THROWS_AS(simplex::build(Spec::with_default_schedule(2, {rv({1, 2})})), PreconditionViolated);
  CHECK_THROWS_AS(simplex::build(Spec{2, {rv({1, 1}), rv({1, 0})}, {0}}), PreconditionViolated);
}

TEST_CASE("schedules must be strictly increasing") {
  CHECK_THROWS_AS(simplex::build(Spec{2, {rv({1, 1}), rv({1, 0}), rv({0, 1})}, {1, 1}}), PreconditionViolated);
}

TEST_CASE("reference spec builds and certifies every stage") {
  auto s = simplex::build(simplex::reference_spec());
  CHECK(s.m() == 3);
  CHECK(s.stages() == 8);
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(s.lambda(k) == t_power(k));
    CHECK_FALSE(s.span(k).contains(s.coordinates(s.lambda(k))));
  }
}

TEST_CASE("trace and s_bounds examples") {
  auto s = two_point();
  CHECK(simplex::traces(s, el({1})) == std::vector<TScalar>{c(1), c(1)});
  CHECK(simplex::traces(s, el({})) == std::vector<TScalar>{TScalar(), TScalar()});
  CHECK(simplex::traces(s, el({0, 1})) == std::vector<TScalar>{c(1) - t(), -t()});

  auto b0 = simplex::s_bounds(F(), s, el({1}));
  CHECK(b0.s_minus == c(1));
  CHECK(b0.s_plus == c(1));
  CHECK(b0.argmin == 0);
  CHECK(b0.argmax == 0);

  auto b1 = simplex::s_bounds(F(), s, el({0, 1}));
  CHECK(b1.s_minus == -t());
  CHECK(b1.s_plus == c(1) - t());
  CHECK(b1.argmin == 1);
  CHECK(b1.argmax == 0);

  auto b2 = simplex::s_bounds(F(), s, el({0, -1}));
  CHECK(b2.s_minus == t() - c(1));
  CHECK(b2.s_plus == t());
  CHECK_THROWS_AS(simplex::trace(s, el({0, 0, 1}), 0), PreconditionViolated);
  CHECK_THROWS_AS(simplex::trace(s, el({1}), 2), PreconditionViolated);
}

TEST_CASE("verify_coset examples") {
  auto s = two_point();
  auto c1 = simplex::verify_coset(F(), s, el({0, 1}));
  CHECK(c1.passed());
  CHECK(c1.minus_shifted == TScalar());
  CHECK(c1.plus_shifted == c(1));
  auto c2 = simplex::verify_coset(F(), s, el({1, 2}));
  CHECK(c2.passed());
  CHECK(c2.minus_shifted == c(1));
  CHECK_THROWS_AS(simplex::verify_coset(F(), s, el({1})), TopIndexZero);
}

TEST_CASE("classify examples") {
  auto s = two_point();
  CHECK(simplex::classify(F(), s, el({1})) == Class::Pos);
  CHECK(simplex::classify(F(), s, el({0, 1})) == Class::Mixed);
  CHECK(simplex::classify(F(), s, el({})) == Class::Zero);
  CHECK(simplex::classify(F(), s, el({-1})) == Class::Neg);
}

TEST_CASE("interpolate examples") {
  auto s = two_point();
  auto in_gap = [&](const Element& z, const std::vector<Element>& lo, const std::vector<Element>& hi) {
    for (std::size_t j = 0; j < s.m(); ++j) {
      TScalar tz = simplex::trace(s, z, j);
      for (const auto& g : lo)
        if (!F().less(simplex::trace(s, g, j), tz)) return false;
      for (const auto& h : hi)
        if (!F().less(tz, simplex::trace(s, h, j))) return false;
    }
    return true;
  };
  Element zero = el({}), one = el({1}), v1 = el({0, 1});
  CHECK(in_gap(simplex::interpolate(F(), s, zero, zero, one, one), {zero}, {one}));
  CHECK(in_gap(simplex::interpolate(F(), s, -one, -one, one, one), {-one}, {one}));
  CHECK(in_gap(simplex::interpolate(F(), s, zero, v1, one, one), {zero, v1}, {one}));
  CHECK_THROWS_AS(simplex::interpolate(F(), s, one, zero, one, one), PreconditionViolated);
}

TEST_CASE("interpolation fails honestly when the v_i cannot span") {
  // Four extreme points of a square, only 1, x - t, y - t^2 available. With
  // g2 ~ x + y - s and h_l ~ x + e1, y + e2, any affine z would need
  // z(1,1) < e1 + e2 < 2 - s, contradicting z(1,1) > g2(1,1).
  auto s = simplex::build(Spec::with_default_schedule(4, {rv({1, 1, 1, 1}), rv({0, 1, 0, 1}), rv({0, 0, 1, 1})}));
  Element g1 = el({}), g2 = el({0, 1, 1});
  Element h1(std::vector<Rational>{make_rational(51, 50), Rational(1)});
  Element h2(std::vector<Rational>{make_rational(9, 10), Rational(0), Rational(1)});
  CHECK_THROWS_AS(simplex::interpolate(F(), s, g1, g2, h1, h2), NotFound);
}

TEST_CASE("property: Lemma 1, sandwich, sign flip, coset and linearity on the reference state") {
  auto s = simplex::build(simplex::reference_spec());
  SeededRng rng(61);
  for (int i = 0; i < 150; ++i) {
    Element g = simplex::random_element(rng, s, 10);
    Element h = simplex::random_element(rng, s, 10);
    auto b = simplex::s_bounds(F(), s, g);
    REQUIRE(F().sign(b.s_minus) != 0);
    REQUIRE(F().sign(b.s_plus) != 0);
    REQUIRE(simplex::classify(F(), s, g) != Class::Violation);
    for (const auto& x : simplex::traces(s, g)) {
      REQUIRE(F().compare(b.s_minus, x) <= 0);
      REQUIRE(F().compare(x, b.s_plus) <= 0);
    }
    auto nb = simplex::s_bounds(F(), s, -g);
    REQUIRE(nb.s_minus == -b.s_plus);
    REQUIRE(nb.s_plus == -b.s_minus);
    if (g.top() >= 1) REQUIRE(simplex::verify_coset(F(), s, g).passed());
    for (std::size_t j = 0; j < s.m(); ++j)
      REQUIRE(simplex::trace(s, g + h, j) == simplex::trace(s, g, j) + simplex::trace(s, h, j));
  }
}
