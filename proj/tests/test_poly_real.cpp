#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dimgroup;
using testsupport::product_of_roots;

namespace {

const ScalarField& F() { return ScalarField::standard(); }
TScalar t() { return t_power(1); }
TScalar c(long p, long q = 1) { return TScalar(make_rational(p, q)); }
XPoly x() { return x_power(1); }
XPoly k(long p, long q = 1) { return XPoly(c(p, q)); }
DomainInterval dom(long a, long b) { return {F(), c(a), c(b)}; }
DomainInterval unit() { return DomainInterval::unit(F()); }

}  // namespace

TEST_CASE("domain intervals need a < b") {
  CHECK_THROWS_AS(DomainInterval(F(), c(1), c(1)), PreconditionViolated);
  CHECK_THROWS_AS(DomainInterval(F(), c(1), t()), PreconditionViolated);
  CHECK_NOTHROW(DomainInterval(F(), t(), c(1)));
}

TEST_CASE("squarefree_part examples") {
  XPoly sq = (k(2) * x() - k(1)) * (k(2) * x() - k(1));
  CHECK(squarefree_part(F(), sq) == k(2) * x() - k(1));
  CHECK(squarefree_part(F(), x()) == x());
  XPoly xt = x() - XPoly(t());
  XPoly f = xt * xt * (x() + k(1));
  XPoly s = squarefree_part(F(), f);
  CHECK(s.degree() == 2);
  CHECK(divide_exact(xt * (x() + k(1)), s).is_constant());
  CHECK_THROWS_AS(squarefree_part(F(), XPoly()), ZeroPolynomial);
}

TEST_CASE("gcd over Q[t] finds shared factors with t-dependent roots") {
  XPoly a = (x() - XPoly(t())) * (x() - k(1, 2));
  XPoly b = (x() - XPoly(t())) * (x() + XPoly(t() * t()));
  XPoly g = gcd(F(), a, b);
  CHECK(g.degree() == 1);
  CHECK(g.evaluate(t()).is_zero());
  CHECK(gcd(F(), x() - k(1), x() - k(2)).degree() == 0);
}

TEST_CASE("content removal skips zero coefficients") {
  // 6x^2 (x^3 - t^3): gcd with its derivative is x, with no leftover power of t.
  XPoly d = k(6) * x() * x() * (x() * x() * x() - XPoly(t() * t() * t()));
  CHECK(gcd(F(), d, d.derivative()) == x());
  CHECK(squarefree_part(F(), d) == x() * x() * x() * x() - x() * XPoly(t() * t() * t()));
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(F(), x() * x() - k(1, 4), unit()).count == 1);
  CHECK(sturm_count(F(), x() * x() + k(1), dom(-1, 1)).count == 0);
  CHECK(sturm_count(F(), x() - XPoly(t()), unit()).count == 1);
  SturmCount left = sturm_count(F(), x(), unit());
  CHECK(left.count == 0);
  CHECK(left.root_at_left);
  CHECK(sturm_count(F(), x() - k(1), unit()).count == 1);
  CHECK_THROWS_AS(sturm_count(F(), XPoly(), unit()), ZeroPolynomial);
}

TEST_CASE("isolate_roots examples") {
  auto r = isolate_roots(F(), (x() - k(1, 3)) * (x() - k(2, 3)), unit()).roots;
  REQUIRE(r.size() == 2);
  CHECK(r[0].contains(F(), c(1, 3)));
  CHECK(r[1].contains(F(), c(2, 3)));
  CHECK(r[0].multiplicity == 1);
  CHECK(r[1].multiplicity == 1);
  CHECK(F().compare(r[0].hi, r[1].lo) <= 0);
  CHECK(isolate_roots(F(), x() * x() + k(1), unit()).roots.empty());
  auto rt = isolate_roots(F(), x() - XPoly(t()), unit()).roots;
  REQUIRE(rt.size() == 1);
  CHECK(rt[0].contains(F(), t()));
  CHECK(rt[0].multiplicity == 1);
}

TEST_CASE("isolate_roots: multiplicities, endpoint roots and t-dependent roots") {
  XPoly f = product_of_roots({{t(), 2}, {c(1, 7), 1}, {t() * t(), 3}});
  auto r = isolate_roots(F(), f, unit()).roots;
  REQUIRE(r.size() == 3);
  CHECK(r[0].contains(F(), t() * t()));
  CHECK(r[0].multiplicity == 3);
  CHECK(r[1].contains(F(), t()));
  CHECK(r[1].multiplicity == 2);
  CHECK(r[2].contains(F(), c(1, 7)));
  CHECK(r[2].multiplicity == 1);

  auto ends = isolate_roots(F(), product_of_roots({{c(0), 1}, {c(1), 2}}), unit()).roots;
  REQUIRE(ends.size() == 2);
  CHECK(ends[0].exact);
  CHECK(ends[0].lo == c(0));
  CHECK(ends[1].exact);
  CHECK(ends[1].lo == c(1));
  CHECK(ends[1].multiplicity == 2);
}

TEST_CASE("property: constructed products of rational roots") {
  SeededRng rng(21);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::pair<TScalar, unsigned>> roots;
    std::vector<Rational> used;
    auto n = rng.uniform_int(1, 4);
    while (static_cast<long>(roots.size()) < n) {
      Rational r = make_rational(rng.uniform_int(-20, 20), rng.uniform_int(1, 8));
      if (std::find(used.begin(), used.end(), r) != used.end()) continue;
      used.push_back(r);
      roots.emplace_back(TScalar(r), static_cast<unsigned>(rng.uniform_int(1, 3)));
    }
    XPoly f = product_of_roots(roots);
    DomainInterval d = dom(-1, 2);
    std::size_t inside = 0;
    bool at_left = false;
    for (const auto& r : used) {
      if (r > -1 && r <= 2) ++inside;
      if (r == -1) at_left = true;
    }
    SturmCount sc = sturm_count(F(), f, d);
    REQUIRE(sc.count == inside);
    REQUIRE(sc.root_at_left == at_left);
    auto iso = isolate_roots(F(), f, d).roots;
    REQUIRE(iso.size() == inside + (at_left ? 1 : 0));
    for (const auto& [r, m] : roots) {
      if (!F().less(c(-1), r) && r != c(-1)) continue;
      if (F().less(c(2), r)) continue;
      std::size_t hits = 0;
      for (const auto& iv : iso)
        if (iv.contains(F(), r)) {
          ++hits;
          REQUIRE(iv.multiplicity == m);
        }
      REQUIRE(hits == 1);
    }
  }
}

TEST_CASE("extremum_sign examples") {
  CHECK(extremum_sign(F(), x() * x() + k(1), unit(), Direction::Min).verdict == ExtremumVerdict::Pos);
  XPoly sq = (k(2) * x() - k(1)) * (k(2) * x() - k(1));
  auto z = extremum_sign(F(), sq, unit(), Direction::Min);
  CHECK(z.verdict == ExtremumVerdict::Zero);
  REQUIRE(z.root);
  CHECK(z.root->contains(F(), c(1, 2)));
  auto n = extremum_sign(F(), x() - XPoly(t()), unit(), Direction::Min);
  CHECK(n.verdict == ExtremumVerdict::Neg);
  REQUIRE(n.sample);
  CHECK(*n.sample == c(0));
  CHECK(extremum_sign(F(), x() - XPoly(t()), unit(), Direction::Max).verdict == ExtremumVerdict::Pos);
  CHECK(extremum_sign(F(), -sq, unit(), Direction::Max).verdict == ExtremumVerdict::Zero);
  CHECK(extremum_sign(F(), k(-1), unit(), Direction::Max).verdict == ExtremumVerdict::Neg);
  CHECK_THROWS_AS(extremum_sign(F(), XPoly(), unit(), Direction::Min), ZeroPolynomial);
}

TEST_CASE("property: extremum verdicts agree with dense rational sampling") {
  SeededRng rng(22);
  for (int i = 0; i < 60; ++i) {
    std::vector<TScalar> cs(static_cast<std::size_t>(rng.uniform_int(1, 5)));
    for (auto& x : cs) x = testsupport::random_tscalar(rng, 2, 6);
    XPoly f(cs);
    if (f.is_zero()) continue;
    auto r = extremum_sign(F(), f, unit(), Direction::Min);
    if (r.verdict == ExtremumVerdict::Neg) {
      REQUIRE(r.sample);
      REQUIRE(F().sign(f.evaluate(*r.sample)) < 0);
    }
    if (r.verdict == ExtremumVerdict::Pos) {
      for (int j = 0; j <= 32; ++j) REQUIRE(F().sign(f.evaluate(c(j, 32))) > 0);
    }
    auto m = extremum_sign(F(), f, unit(), Direction::Max);
    auto neg = extremum_sign(F(), -f, unit(), Direction::Min);
    REQUIRE((m.verdict == ExtremumVerdict::Pos) == (neg.verdict == ExtremumVerdict::Neg));
  }
}

TEST_CASE("lemma2_witness examples") {
  auto w = lemma2_witness(F(), x(), unit());
  CHECK(w.q == make_rational(1, 2));
  CHECK(w.g == k(2) * x() - k(1));
  CHECK(w.root.contains(F(), c(1, 2)));

  auto w2 = lemma2_witness(F(), x() * x(), unit(), 1, make_rational(1, 4));
  CHECK(w2.g == k(4) * x() * x() - k(1));
  CHECK(w2.root.contains(F(), c(1, 2)));

  CHECK_THROWS_AS(lemma2_witness(F(), k(1), unit()), ConstantFunction);
  CHECK_THROWS_AS(lemma2_witness(F(), x(), unit(), 1, Rational(2)), PreconditionViolated);
}

TEST_CASE("lemma2_witness gives both strict signs and a root for varied h") {
  for (const XPoly& h : {x(), x() * x(), x() - x() * x() * x(), x() - XPoly(t()), x() * x() * x() - XPoly(t())}) {
    auto w = lemma2_witness(F(), h, unit(), make_rational(3, 2));
    CHECK(F().sign(w.g.evaluate(w.negative_point)) < 0);
    CHECK(F().sign(w.g.evaluate(w.positive_point)) > 0);
    CHECK(isolate_roots(F(), w.g, unit()).roots.size() >= 1);
  }
}
