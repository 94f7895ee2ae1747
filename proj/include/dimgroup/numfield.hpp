#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimgroup/error.hpp"
#include "dimgroup/poly_real.hpp"
#include "dimgroup/polynomial.hpp"
#include "dimgroup/rng.hpp"

namespace dimgroup::nf {

using QxPoly = QPolynomial<XVar>;

/// A gcd with the defining polynomial produced a proper nontrivial factor,
/// so the quotient ring is not a field.
class ReducibleMinpoly : public Error {
 public:
  explicit ReducibleMinpoly(QxPoly factor)
      : Error("defining polynomial is reducible (found a proper factor)"), factor_(std::move(factor)) {}
  const QxPoly& factor() const { return factor_; }

 private:
  QxPoly factor_;
};

/// Real root of the defining polynomial: exact rational, or the unique root
/// in the open interval (lo, hi).
struct Embedding {
  Rational lo;
  Rational hi;
  bool exact = false;
};

/// K = Q[x]/(minpoly) with its real embeddings, sorted by root value.
/// Irreducibility is not checked up front; gcd computations that expose a
/// factor raise ReducibleMinpoly.
class NumberField {
 public:
  explicit NumberField(const QxPoly& minpoly) {
    if (minpoly.degree() < 1) throw PreconditionViolated("defining polynomial must have degree >= 1");
    minpoly_ = primitive_integer(minpoly);
    if (gcd<XVar>(minpoly_, minpoly_.derivative()).degree() > 0)
      throw NotSquarefree("defining polynomial is not square-free");

    Rational bound = 0;
    for (const auto& c : minpoly_.coefficients()) bound = std::max(bound, abs_of(c / minpoly_.leading()));
    bound += 1;
    const auto& field = ScalarField::standard();
    DomainInterval dom(field, TScalar(Rational(-bound)), TScalar(bound));
    for (const auto& r : isolate_roots(field, lift(minpoly_), dom).roots)
      embeddings_.push_back({r.lo.coeff(0), r.hi.coeff(0), r.exact});
    if (embeddings_.empty()) throw NotFormallyReal("defining polynomial has no real root");
    for (auto& e : embeddings_) shrink(e, make_rational(1, 1024));
  }

  static NumberField from_integers(const std::vector<long>& coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return NumberField(QxPoly(std::move(v)));
  }

  const QxPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const std::vector<Embedding>& embeddings() const { return embeddings_; }

  QxPoly reduce(const QxPoly& p) const { return divmod(p, minpoly_).second; }

  /// Bisects an open isolating interval down to the given width (or onto an
  /// exact rational root).
  void shrink(Embedding& e, const Rational& width) const {
    if (e.exact) return;
    const int sign_lo = sgn(minpoly_.evaluate(e.lo));
    while (e.hi - e.lo > width) {
      Rational mid = (e.lo + e.hi) / 2;
      int sm = sgn(minpoly_.evaluate(mid));
      if (sm == 0) {
        e = {mid, mid, true};
        return;
      }
      (sm == sign_lo ? e.lo : e.hi) = mid;
    }
  }

  /// Primitive integer multiple with positive leading coefficient.
  static QxPoly primitive_integer(const QxPoly& p) {
    Integer den = 1, num = 0;
    for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : p.coefficients()) {
      Rational s = c * den;
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), s.get_num_mpz_t());
    }
    Rational scale = make_rational(den, num);
    if (sgn(p.leading()) < 0) scale = -scale;
    return p.scaled(scale);
  }

 private:
  QxPoly minpoly_;
  std::vector<Embedding> embeddings_;
};

/// Residue of degree < d.
class Element {
 public:
  Element() = default;
  Element(const NumberField& k, const QxPoly& p) : poly_(k.reduce(p)) {}
  static Element from_rational(const Rational& q) { return Element(QxPoly(q)); }

  const QxPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  friend bool operator==(const Element&, const Element&) = default;

  Element operator-() const { return Element(-poly_); }
  friend Element operator+(const Element& a, const Element& b) { return Element(a.poly_ + b.poly_); }
  friend Element operator-(const Element& a, const Element& b) { return Element(a.poly_ - b.poly_); }

 private:
  explicit Element(QxPoly reduced) : poly_(std::move(reduced)) {}
  QxPoly poly_;
};

inline Element multiply(const NumberField& k, const Element& a, const Element& b) {
  return Element(k, a.poly() * b.poly());
}

inline Element inverse(const NumberField& k, const Element& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  auto r = xgcd<XVar>(a.poly(), k.minpoly());
  if (r.gcd.degree() > 0) throw ReducibleMinpoly(r.gcd);
  Element inv(k, r.s);
  if (!(multiply(k, a, inv) == Element::from_rational(1)))
    throw InvariantViolation("inverse failed to re-verify");
  return inv;
}

namespace detail {

/// Shrinks the isolating interval of embedding j until pred(value enclosure)
/// holds, or the root is hit exactly.
template <class Pred>
Enclosure refine_value(const NumberField& k, const QxPoly& p, std::size_t j, Pred&& pred) {
  const Embedding& emb = k.embeddings().at(j);
  if (emb.exact) return Enclosure(p.evaluate(emb.lo));
  Rational lo = emb.lo, hi = emb.hi;
  const int sign_lo = sgn(k.minpoly().evaluate(lo));
  for (int iter = 0; iter < 100000; ++iter) {
    Enclosure e = p.evaluate(Enclosure(lo, hi));
    if (pred(e)) return e;
    Rational mid = (lo + hi) / 2;
    int sm = sgn(k.minpoly().evaluate(mid));
    if (sm == 0) return Enclosure(p.evaluate(mid));
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  throw PrecisionExhausted("embedding refinement did not converge");
}

/// Sign of p at embedding j, assuming p does not vanish there.
inline int sign_at(const NumberField& k, const QxPoly& p, std::size_t j) {
  Enclosure e = refine_value(k, p, j, [](const Enclosure& v) { return v.excludes_zero(); });
  if (!e.excludes_zero()) throw InvariantViolation("nonzero element vanished at an embedding");
  return e.certain_sign();
}

}  // namespace detail

inline int embed_sign(const NumberField& k, const Element& a, std::size_t j) {
  if (j >= k.embeddings().size()) throw PreconditionViolated("embedding index out of range");
  if (a.is_zero()) return 0;
  QxPoly g = gcd<XVar>(a.poly(), k.minpoly());
  if (g.degree() > 0) throw ReducibleMinpoly(g);
  return detail::sign_at(k, a.poly(), j);
}

/// Positive at every real embedding. For a number field this cone is the
/// cone of sums of squares.
inline bool is_totally_positive(const NumberField& k, const Element& a) {
  for (std::size_t j = 0; j < k.embeddings().size(); ++j)
    if (embed_sign(k, a, j) <= 0) return false;
  return true;
}

inline bool is_order_unit(const NumberField& k, const Element& a) { return is_totally_positive(k, a); }

/// A positive integer N with N - a totally positive.
inline Integer dominating_integer(const NumberField& k, const Element& a) {
  Rational top = 0;
  for (std::size_t j = 0; j < k.embeddings().size(); ++j) {
    Enclosure e = detail::refine_value(k, a.poly(), j, [](const Enclosure& v) { return v.width() <= 1; });
    top = std::max(top, e.hi);
  }
  Integer n = floor_of(top) + 1;
  if (!is_totally_positive(k, Element::from_rational(Rational(n)) - a))
    throw InvariantViolation("dominating integer failed exact re-check");
  return n;
}

/// Nonzero element vanishing at a real embedding; its existence certifies a
/// reducible defining polynomial.
struct VanishingWitness {
  Element element;
  std::size_t embedding = 0;
  QxPoly factor;
};

/// Embeddings at which a nonzero element vanishes (none when the defining
/// polynomial is irreducible).
inline std::optional<VanishingWitness> find_vanishing_embedding(const NumberField& k, const Element& a) {
  if (a.is_zero()) throw PreconditionViolated("element must be nonzero");
  QxPoly g = gcd<XVar>(a.poly(), k.minpoly());
  if (g.degree() <= 0) return std::nullopt;
  const auto& field = ScalarField::standard();
  XPoly lifted = lift(g);
  for (std::size_t j = 0; j < k.embeddings().size(); ++j) {
    const Embedding& e = k.embeddings()[j];
    IsolatingInterval iv{TScalar(e.lo), TScalar(e.hi), e.exact, 1};
    if (dimgroup::detail::has_root_in(field, lifted, iv)) return VanishingWitness{a, j, g};
  }
  return std::nullopt;
}

/// Coefficients on 1, x, ..., x^(d-1) drawn with SeededRng::rational(bound);
/// the zero vector is redrawn.
inline Element random_element(const NumberField& k, SeededRng& rng, std::int64_t bound) {
  while (true) {
    std::vector<Rational> c;
    for (int i = 0; i < k.degree(); ++i) c.push_back(rng.rational(bound));
    Element e(k, QxPoly(std::move(c)));
    if (!e.is_zero()) return e;
  }
}

/// Draws `samples` random nonzero elements and checks that none vanishes at
/// a real embedding. Returns the first counterexample.
inline std::optional<VanishingWitness> verify_extreme_simplicity(const NumberField& k, std::size_t samples,
                                                                 std::uint64_t seed, std::int64_t bound = 3) {
  SeededRng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Element a = random_element(k, rng, bound);
    if (auto w = find_vanishing_embedding(k, a)) return w;
    for (std::size_t j = 0; j < k.embeddings().size(); ++j)
      if (detail::sign_at(k, a.poly(), j) == 0) throw InvariantViolation("zero embedding value without a common factor");
  }
  return std::nullopt;
}

}  // namespace dimgroup::nf
