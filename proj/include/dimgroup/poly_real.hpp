#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimgroup/error.hpp"
#include "dimgroup/polynomial.hpp"
#include "dimgroup/scalar_field.hpp"

namespace dimgroup {

/// Polynomial in x with coefficients in Q[t].
using XPoly = Polynomial<TScalar, XVar>;

inline XPoly x_power(std::size_t k) { return XPoly::variable_power(k); }

/// Embeds a rational-coefficient polynomial in x.
template <class V>
XPoly lift(const QPolynomial<V>& p) {
  return XPoly(p.map([](const Rational& c) { return TScalar(c); }));
}

inline std::vector<std::string> to_strings(const XPoly& p) {
  return p.map([](const TScalar& c) { return to_string(c); });
}

inline XPoly parse_xpoly(const std::vector<std::string>& coeffs) {
  std::vector<TScalar> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(parse_tscalar(s));
  return XPoly(std::move(v));
}

/// Closed interval [a, b] of the real line with a < b; endpoints in Q[t].
class DomainInterval {
 public:
  DomainInterval(const ScalarField& field, TScalar a, TScalar b) : a_(std::move(a)), b_(std::move(b)) {
    if (!field.less(a_, b_))
      throw PreconditionViolated("domain interval needs a < b, got [" + to_string(a_) + ", " +
                                 to_string(b_) + "]");
  }
  static DomainInterval unit(const ScalarField& field) { return {field, TScalar(), TScalar(Rational(1))}; }

  const TScalar& a() const { return a_; }
  const TScalar& b() const { return b_; }

 private:
  TScalar a_, b_;
};

/// One distinct root. Either exact (lo == hi is the root) or the root is the
/// only one in the open interval (lo, hi) and neither endpoint is a root.
struct IsolatingInterval {
  TScalar lo;
  TScalar hi;
  bool exact = false;
  unsigned multiplicity = 1;

  bool contains(const ScalarField& field, const TScalar& x) const {
    if (exact) return x == lo;
    return field.less(lo, x) && field.less(x, hi);
  }
};

struct RootIsolation {
  std::vector<IsolatingInterval> roots;  // sorted ascending
};

// ---------------------------------------------------------------------------
// Content, normalization and exact division over Q[t].

namespace detail {

inline TScalar content_in_t(const XPoly& p) {
  bool all_constant = true;
  for (const auto& c : p.coefficients()) all_constant = all_constant && c.is_constant();
  if (all_constant) return TScalar(Rational(1));
  TScalar g;
  for (const auto& c : p.coefficients()) {
    if (c.is_zero()) continue;
    g = gcd<TVar>(g, c);
    if (g.is_constant()) return TScalar(Rational(1));
  }
  return g;
}

inline TScalar divide_exact_t(const TScalar& a, const TScalar& b) { return divide_exact<TVar>(a, b); }

/// Positive rational r such that r*p has coprime integer coefficients.
inline Rational integer_scale(const XPoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients())
    for (const auto& q : c.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coefficients())
    for (const auto& q : c.coefficients()) {
      Rational s = q * den_lcm;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
  if (sgn(g) == 0) return 1;
  return make_rational(den_lcm, g);
}

/// p divided by its Q[t]-content and scaled to coprime integers. The factor
/// removed is not sign-controlled.
inline XPoly primitive_part(const XPoly& p) {
  if (p.is_zero()) return p;
  TScalar c = content_in_t(p);
  XPoly q = p;
  if (!c.is_constant()) q = XPoly(p.map([&](const TScalar& x) { return divide_exact_t(x, c); }));
  return q.scaled(TScalar(integer_scale(q)));
}

/// Same as primitive_part but the removed factor is positive at t, so the
/// sign of the result agrees with p everywhere.
inline XPoly positive_primitive_part(const ScalarField& field, const XPoly& p) {
  if (p.is_zero()) return p;
  TScalar c = content_in_t(p);
  XPoly q = p;
  if (!c.is_constant()) {
    q = XPoly(p.map([&](const TScalar& x) { return divide_exact_t(x, c); }));
    if (field.sign(c) < 0) q = -q;
  }
  return q.scaled(TScalar(integer_scale(q)));
}

}  // namespace detail

/// Primitive over Q[t] with coprime integer coefficients and a leading
/// coefficient that is positive at t.
inline XPoly normalize(const ScalarField& field, const XPoly& p) {
  XPoly q = detail::primitive_part(p);
  if (!q.is_zero() && field.sign(q.leading()) < 0) q = -q;
  return q;
}

/// a / b where b divides a over Q(t) and b is primitive (so the quotient has
/// coefficients in Q[t]).
inline XPoly divide_exact(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw InvariantViolation("inexact polynomial division over Q[t]");
  }
  std::vector<TScalar> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<TScalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    if (r[top].is_zero()) continue;
    TScalar c = detail::divide_exact_t(r[top], b.leading());
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= c * bc[j];
    q[static_cast<std::size_t>(k)] = std::move(c);
  }
  for (const auto& x : r)
    if (!x.is_zero()) throw InvariantViolation("inexact polynomial division over Q[t]");
  return XPoly(std::move(q));
}

/// Normalized gcd via the primitive pseudo-remainder sequence.
inline XPoly gcd(const ScalarField& field, const XPoly& f, const XPoly& g) {
  if (f.is_zero()) return normalize(field, g);
  if (g.is_zero()) return normalize(field, f);
  XPoly a = detail::primitive_part(f), b = detail::primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    XPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = detail::primitive_part(r);
  }
  return normalize(field, a);
}

/// f / gcd(f, f'), normalized. Same distinct roots as f, all simple.
inline XPoly squarefree_part(const ScalarField& field, const XPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("square-free part of the zero polynomial");
  XPoly g = gcd(field, f, f.derivative());
  return normalize(field, divide_exact(f, g));
}

// ---------------------------------------------------------------------------
// Sturm sequences.

/// Signed remainder chain S0 = f, S1 = f', S_{i+1} = -rem(S_{i-1}, S_i), each
/// term known only up to a factor that is positive at t. Pseudo-remainders
/// carry lc(S_i)^delta, whose sign is corrected explicitly.
class SturmChain {
 public:
  SturmChain(const ScalarField& field, const XPoly& f) : field_(&field) {
    if (f.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
    chain_.push_back(f);
    XPoly d = detail::positive_primitive_part(field, f.derivative());
    if (d.is_zero()) return;
    chain_.push_back(std::move(d));
    while (true) {
      const XPoly& prev = chain_[chain_.size() - 2];
      const XPoly& cur = chain_.back();
      XPoly r = pseudo_remainder(prev, cur);
      if (r.is_zero()) break;
      int delta = prev.degree() - cur.degree() + 1;
      bool flip = (delta % 2 == 1) && field.sign(cur.leading()) < 0;
      XPoly next = detail::positive_primitive_part(field, flip ? r : -r);
      chain_.push_back(std::move(next));
    }
  }

  const std::vector<XPoly>& polys() const { return chain_; }

  /// Sign variations at x, zeros dropped.
  int variations(const TScalar& x) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
      int s = field_->sign(p.evaluate(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct roots of a square-free f in (lo, hi].
  int count(const TScalar& lo, const TScalar& hi) const { return variations(lo) - variations(hi); }

 private:
  const ScalarField* field_;
  std::vector<XPoly> chain_;
};

struct SturmCount {
  std::size_t count = 0;       // distinct roots in (a, b]
  bool root_at_left = false;   // f(a) == 0
};

inline SturmCount sturm_count(const ScalarField& field, const XPoly& f, const DomainInterval& dom) {
  if (f.is_zero()) throw ZeroPolynomial("sturm_count of the zero polynomial");
  XPoly sf = squarefree_part(field, f);
  SturmChain chain(field, sf);
  return {static_cast<std::size_t>(chain.count(dom.a(), dom.b())), sf.evaluate(dom.a()).is_zero()};
}

// ---------------------------------------------------------------------------
// Root isolation.

namespace detail {

class Isolator {
 public:
  Isolator(const ScalarField& field, const XPoly& sf) : field_(field), sf_(sf), chain_(field, sf) {}

  std::vector<IsolatingInterval> run(const TScalar& a, const TScalar& b) {
    if (is_root(a)) out_.push_back({a, a, true, 1});
    split(a, b, chain_.variations(a), chain_.variations(b));
    return std::move(out_);
  }

 private:
  bool is_root(const TScalar& x) const { return sf_.evaluate(x).is_zero(); }

  // Roots in (lo, hi], given variation counts at both ends.
  void split(const TScalar& lo, const TScalar& hi, int vlo, int vhi) {
    const int n = vlo - vhi;
    if (n <= 0) return;
    if (n == 1) {
      if (is_root(hi)) {
        out_.push_back({hi, hi, true, 1});
        return;
      }
      if (!is_root(lo)) {
        out_.push_back({lo, hi, false, 1});
        return;
      }
    }
    Rational m = field_.rational_between(lo, hi);
    TScalar mt(m);
    int vm = chain_.variations(mt);
    split(lo, mt, vlo, vm);
    split(mt, hi, vm, vhi);
  }

  const ScalarField& field_;
  const XPoly& sf_;
  SturmChain chain_;
  std::vector<IsolatingInterval> out_;
};

inline bool has_root_in(const ScalarField& field, const XPoly& p, const IsolatingInterval& iv) {
  if (iv.exact) return p.evaluate(iv.lo).is_zero();
  XPoly sf = squarefree_part(field, p);
  return SturmChain(field, sf).count(iv.lo, iv.hi) > 0;
}

}  // namespace detail

/// All distinct roots of f in [a, b] with multiplicities. Multiplicity of a
/// root is the number of polynomials in g0 = f, g_{k+1} = gcd(g_k, g_k')
/// that vanish there.
inline RootIsolation isolate_roots(const ScalarField& field, const XPoly& f, const DomainInterval& dom) {
  if (f.is_zero()) throw ZeroPolynomial("isolate_roots of the zero polynomial");
  XPoly sf = squarefree_part(field, f);
  RootIsolation iso{detail::Isolator(field, sf).run(dom.a(), dom.b())};
  XPoly g = gcd(field, f, f.derivative());
  while (g.degree() > 0) {
    for (auto& r : iso.roots)
      if (detail::has_root_in(field, g, r)) ++r.multiplicity;
    g = gcd(field, g, g.derivative());
  }
  return iso;
}

// ---------------------------------------------------------------------------
// Certified sign of the minimum / maximum on an interval.

enum class Direction { Min, Max };
enum class ExtremumVerdict { Pos, Zero, Neg };

inline const char* to_string(ExtremumVerdict v) {
  switch (v) {
    case ExtremumVerdict::Pos: return "POS";
    case ExtremumVerdict::Zero: return "ZERO";
    case ExtremumVerdict::Neg: return "NEG";
  }
  return "?";
}

/// verdict POS: the extremum is strictly positive; ZERO: it is 0, attained at
/// `root`; NEG: negative, with f(sample) < 0 (a rational point or a domain
/// endpoint). For MAX the verdict describes max f, and `sample` is a point
/// where f > 0 when the verdict is POS.
struct MinSignReport {
  ExtremumVerdict verdict = ExtremumVerdict::Pos;
  std::optional<TScalar> sample;
  std::optional<IsolatingInterval> root;
};

namespace detail {

inline MinSignReport min_sign(const ScalarField& field, const XPoly& f, const DomainInterval& dom) {
  RootIsolation iso = isolate_roots(field, f, dom);
  const auto& roots = iso.roots;

  std::vector<TScalar> samples;
  if (roots.empty()) {
    samples.push_back(dom.a());
  } else {
    if (!(roots.front().exact && roots.front().lo == dom.a())) samples.push_back(dom.a());
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      const TScalar& r = roots[i].hi;
      const TScalar& l = roots[i + 1].lo;
      if (r == l)
        samples.push_back(r);
      else
        samples.emplace_back(field.rational_between(r, l));
    }
    if (!(roots.back().exact && roots.back().hi == dom.b())) samples.push_back(dom.b());
  }

  for (const auto& s : samples) {
    int sg = field.sign(f.evaluate(s));
    if (sg == 0) throw InvariantViolation("sample point between isolated roots is a root");
    if (sg < 0) return {ExtremumVerdict::Neg, s, std::nullopt};
  }
  if (!roots.empty()) return {ExtremumVerdict::Zero, std::nullopt, roots.front()};
  return {ExtremumVerdict::Pos, std::nullopt, std::nullopt};
}

}  // namespace detail

inline MinSignReport extremum_sign(const ScalarField& field, const XPoly& f, const DomainInterval& dom,
                                   Direction direction) {
  if (f.is_zero()) throw ZeroPolynomial("extremum_sign of the zero polynomial");
  if (direction == Direction::Min) return detail::min_sign(field, f, dom);
  MinSignReport r = detail::min_sign(field, -f, dom);
  if (r.verdict == ExtremumVerdict::Neg)
    r.verdict = ExtremumVerdict::Pos;
  else if (r.verdict == ExtremumVerdict::Pos)
    r.verdict = ExtremumVerdict::Neg;
  return r;
}

// ---------------------------------------------------------------------------
// Zero of a non-constant function on a connected set: g = b*h - a*u.

struct Lemma2Witness {
  XPoly g;
  Rational q;                // chosen level; g vanishes where h = q * unit_scale
  IsolatingInterval root;    // a root of g inside the domain
  TScalar negative_point;    // g < 0 here
  TScalar positive_point;    // g > 0 here
};

/// Picks a rational level strictly inside the range of h on the domain (or
/// checks a caller-supplied one) and returns g = den*h - num*unit_scale with
/// an isolated root.
inline Lemma2Witness lemma2_witness(const ScalarField& field, const XPoly& h, const DomainInterval& dom,
                                    const Rational& unit_scale = 1,
                                    std::optional<Rational> level = std::nullopt) {
  if (sgn(unit_scale) <= 0) throw PreconditionViolated("unit scale must be positive");
  if (h.is_constant()) throw ConstantFunction("h is constant");

  auto strictly_inside_range = [&](const Rational& y) {
    XPoly shifted = h - XPoly(TScalar(y));
    return extremum_sign(field, shifted, dom, Direction::Min).verdict == ExtremumVerdict::Neg &&
           extremum_sign(field, shifted, dom, Direction::Max).verdict == ExtremumVerdict::Pos;
  };

  Rational q;
  if (level) {
    q = *level;
    if (!strictly_inside_range(q * unit_scale))
      throw PreconditionViolated("level " + to_string(q) + " is not strictly inside the range of h");
  } else {
    // A nonconstant polynomial takes the value h(a) at most deg h times, so
    // among deg h + 1 further points one differs.
    const TScalar ha = h.evaluate(dom.a());
    std::optional<TScalar> other;
    std::vector<TScalar> points{dom.b()};
    const long n = h.degree() + 1;
    for (long j = 1; j <= n; ++j)
      points.push_back(dom.a() + (dom.b() - dom.a()) * TScalar(make_rational(j, n + 1)));
    for (const auto& p : points) {
      TScalar hp = h.evaluate(p);
      if (!(hp == ha)) {
        other = hp;
        break;
      }
    }
    if (!other) throw ConstantFunction("h is constant on the domain");
    TScalar lo = ha, hi = *other;
    if (field.less(hi, lo)) std::swap(lo, hi);
    q = field.rational_between(lo, hi) / unit_scale;
  }

  XPoly g = h.scaled(TScalar(Rational(q.get_den()))) - XPoly(TScalar(Rational(q.get_num() * unit_scale)));
  MinSignReport mn = extremum_sign(field, g, dom, Direction::Min);
  MinSignReport mx = extremum_sign(field, g, dom, Direction::Max);
  if (mn.verdict != ExtremumVerdict::Neg || mx.verdict != ExtremumVerdict::Pos)
    throw InvariantViolation("lemma2 witness does not change sign");
  RootIsolation iso = isolate_roots(field, g, dom);
  if (iso.roots.empty()) throw InvariantViolation("lemma2 witness has no root");
  return {std::move(g), q, iso.roots.front(), *mn.sample, *mx.sample};
}

}  // namespace dimgroup
