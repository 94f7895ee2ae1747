#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dimgroup;
using testsupport::reference_sign;
using testsupport::reference_t;

namespace {

const ScalarField& F() { return ScalarField::standard(); }
TScalar t() { return t_power(1); }
TScalar c(long p, long q = 1) { return TScalar(make_rational(p, q)); }

// Enclosure of the decimal number 0.ddd (k digits) padded by one unit.
Enclosure decimal_window(const std::string& digits) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, digits.size());
  Integer num(digits, 10);
  return {make_rational(num, den), make_rational(Integer(num + 1), den)};
}

}  // namespace

TEST_CASE("tscalar strings round-trip through the parser") {
  for (const char* s : {"0", "t", "1 - t^2", "1/2 + -1/7*t^2", "-3*t^4 + t", "  2/4 + 3*t "}) {
    TScalar p = parse_tscalar(s);
    CHECK(parse_tscalar(to_string(p)) == p);
  }
  CHECK(to_string(TScalar()) == "0/1");
  CHECK(to_string(parse_tscalar("1/2 + -1/7*t^2")) == "1/2 + -1/7*t^2");
  CHECK(parse_tscalar("t^2 - t^2").is_zero());
  CHECK_THROWS_AS(parse_tscalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_tscalar("x + 1"), ParseError);
  CHECK_THROWS_AS(parse_tscalar(""), ParseError);
  CHECK_THROWS_AS(parse_tscalar("1 +"), ParseError);
}

TEST_CASE("pi-3 oracle agrees with an independent arctan enclosure and known digits") {
  const auto& o = F().oracle();
  for (unsigned bits : {64u, 200u, 700u}) {
    Enclosure mine = o.enclose(bits);
    Enclosure ref = reference_t(bits + 8);
    CHECK(mine.width() <= pow2(-static_cast<long>(bits)));
    // Both contain t, so they must overlap; the reference is narrower than ours.
    CHECK(mine.lo <= ref.hi);
    CHECK(ref.lo <= mine.hi);
  }
  Enclosure e = o.enclose(230);
  Enclosure digits = decimal_window(testsupport::kPiDecimals);
  CHECK(e.lo <= digits.hi);
  CHECK(digits.lo <= e.hi);
  CHECK(digits.contains(e.midpoint()));
}

TEST_CASE("oracle answers are nested regardless of request order") {
  auto o = std::make_shared<PiMinus3Oracle>();
  Enclosure fine = o->enclose(300);
  Enclosure coarse = o->enclose(64);
  Enclosure finer = o->enclose(1000);
  CHECK(coarse.contains(fine));
  CHECK(fine.contains(finer));
  CHECK(coarse.lo < coarse.hi);
}

TEST_CASE("sign examples") {
  CHECK(F().sign(TScalar()) == 0);
  CHECK(F().sign(t() - c(1, 7)) == -1);
  CHECK(F().sign(c(1) + t() * t()) == 1);
  CHECK(F().sign(t() - c(1, 8)) == 1);
  CHECK(F().sign(t() * t() - t()) == -1);
  // 355/113 - 3 agrees with pi - 3 to about 2.7e-7.
  CHECK(F().sign(c(355, 113) - c(3) - t()) == 1);
  CHECK(F().sign(parse_tscalar("16/113 - t")) == 1);
}

TEST_CASE("compare examples") {
  CHECK(F().compare(t(), t()) == std::strong_ordering::equal);
  CHECK(F().compare(t(), c(1, 7)) == std::strong_ordering::less);
  CHECK(F().compare(t() * t(), t()) == std::strong_ordering::less);
  CHECK(F().compare(c(1), t()) == std::strong_ordering::greater);
}

TEST_CASE("enclose examples and errors") {
  CHECK(F().enclose(TScalar(), make_rational(1, 3)) == Enclosure(Rational(0)));
  Enclosure e = F().enclose(t(), make_rational(1, 100));
  CHECK(e.width() <= make_rational(1, 100));
  // t lies in [0.1415926535, 0.1415926536].
  CHECK(e.lo <= make_rational(1415926536, 10000000000));
  CHECK(e.hi >= make_rational(1415926535, 10000000000));
  Enclosure f = F().enclose(c(1) + t(), make_rational(1, 10));
  CHECK(f.width() <= make_rational(1, 10));
  CHECK(f.lo <= make_rational(114160, 100000));
  CHECK(f.hi >= make_rational(114159, 100000));
  CHECK_THROWS_AS(F().enclose(t(), Rational(0)), PreconditionViolated);
  CHECK_THROWS_AS(F().enclose(t(), Rational(-1)), PreconditionViolated);
}

TEST_CASE("rational_between separates ordered scalars") {
  CHECK(F().rational_between(c(0), c(1)) == make_rational(1, 2));
  Rational q = F().rational_between(t(), c(1, 7));
  CHECK(F().less(t(), TScalar(q)));
  CHECK(F().less(TScalar(q), c(1, 7)));
  Rational r = F().rational_between(t() * t(), t());
  CHECK(F().less(t() * t(), TScalar(r)));
  CHECK(F().less(TScalar(r), t()));
}

TEST_CASE("an algebraic stand-in for t exhausts the precision cap") {
  ScalarField bad(std::make_shared<testsupport::RationalPointOracle>(make_rational(1, 7)), 256);
  CHECK(bad.sign(t() - c(1, 8)) == 1);
  CHECK_THROWS_AS(bad.sign(t() - c(1, 7)), PrecisionExhausted);
}

TEST_CASE("a short digit expansion exhausts precision") {
  ScalarField short_digits(std::make_shared<DecimalDigitsOracle>("short", "0.14159"));
  CHECK_THROWS_AS(short_digits.sign(t() - c(1, 7)), PrecisionExhausted);
  CHECK_THROWS_AS(DecimalDigitsOracle("bad", "3.14"), ParseError);
  CHECK_THROWS_AS(DecimalDigitsOracle("bad", "0.14x"), ParseError);
  ScalarField long_digits(std::make_shared<DecimalDigitsOracle>("pi", "0." + testsupport::kPiDecimals));
  CHECK(long_digits.sign(t() - c(1, 7)) == -1);
  CHECK(long_digits.sign(c(355, 113) - c(3) - t()) == 1);
}

TEST_CASE("property: sign matches an independent evaluator and enclosures") {
  SeededRng rng(11);
  const Rational w = pow2(-133);  // below 10^-40
  for (int i = 0; i < 150; ++i) {
    TScalar p = testsupport::random_tscalar(rng, 8, 20);
    int s = F().sign(p);
    REQUIRE(s == reference_sign(p));
    Enclosure e = F().enclose(p, w);
    REQUIRE(e.width() <= w);
    if (e.excludes_zero()) REQUIRE(e.certain_sign() == s);
  }
}

TEST_CASE("property: multiplicativity, trichotomy and ring axioms") {
  SeededRng rng(12);
  for (int i = 0; i < 150; ++i) {
    TScalar p = testsupport::random_tscalar(rng, 6, 10);
    TScalar q = testsupport::random_tscalar(rng, 6, 10);
    TScalar r = testsupport::random_tscalar(rng, 6, 10);
    REQUIRE(F().sign(p * q) == F().sign(p) * F().sign(q));
    REQUIRE(F().sign(-p) == -F().sign(p));
    REQUIRE(F().sign(p - p) == 0);
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE((p + q) - q == p);
    auto ord = F().compare(p, q);
    REQUIRE((ord < 0) + (ord == 0) + (ord > 0) == 1);
    REQUIRE(F().compare(q, p) == 0 <=> ord);
  }
}

TEST_CASE("property: enclosures shrink monotonically") {
  SeededRng rng(13);
  for (int i = 0; i < 50; ++i) {
    TScalar p = testsupport::random_tscalar(rng, 5, 10);
    Enclosure wide = F().enclose(p, make_rational(1, 10));
    Enclosure narrow = F().enclose(p, pow2(-100));
    REQUIRE(wide.contains(narrow));
  }
}
