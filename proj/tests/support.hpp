#pragma once

// Reference computations that share no code with the library's numeric path.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dimgroup/dimgroup.hpp"

namespace testsupport {

using dimgroup::Enclosure;
using dimgroup::Rational;
using dimgroup::TScalar;

// First 60 decimals of pi.
inline const std::string kPiDecimals = "141592653589793238462643383279502884197169399375105820974944";

/// Alternating series for arctan(1/x): partial sums with an even number of
/// terms are lower bounds, odd ones upper bounds.
inline Enclosure arctan_inverse(long x, std::size_t pairs) {
  Rational term(1, x), s = 0;
  const Rational x2(x * x);
  std::size_t n = 0;
  for (; n < 2 * pairs; ++n) {
    Rational a = term / static_cast<long>(2 * n + 1);
    s += (n % 2 == 0) ? a : Rational(-a);
    term /= x2;
  }
  return {s, s + term / static_cast<long>(2 * n + 1)};
}

/// pi - 3 = 4 (arctan(1/2) + arctan(1/3)) - 3, width <= 2^-bits.
inline Enclosure reference_t(unsigned bits) {
  for (std::size_t pairs = 8;; pairs *= 2) {
    Enclosure a = arctan_inverse(2, pairs), b = arctan_inverse(3, pairs);
    Enclosure e{4 * (a.lo + b.lo) - 3, 4 * (a.hi + b.hi) - 3};
    if (e.width() <= dimgroup::pow2(-static_cast<long>(bits))) return e;
  }
}

/// Sum of c_k t^k over monomials, each t^k enclosed as [lo^k, hi^k] (t > 0).
inline Enclosure monomial_eval(const TScalar& p, const Enclosure& t) {
  Enclosure acc(Rational(0));
  Rational plo = 1, phi = 1;
  for (const auto& c : p.coefficients()) {
    if (sgn(c) >= 0)
      acc = {acc.lo + c * plo, acc.hi + c * phi};
    else
      acc = {acc.lo + c * phi, acc.hi + c * plo};
    plo *= t.lo;
    phi *= t.hi;
  }
  return acc;
}

inline int reference_sign(const TScalar& p) {
  if (p.is_zero()) return 0;
  for (unsigned bits = 32;; bits *= 2) {
    Enclosure e = monomial_eval(p, reference_t(bits));
    if (e.excludes_zero()) return e.certain_sign();
  }
}

/// Claims t equals a fixed rational: the library cannot decide sign(t - q).
class RationalPointOracle final : public dimgroup::TranscendentalOracle {
 public:
  explicit RationalPointOracle(Rational q) : q_(std::move(q)) {}
  std::string identifier() const override { return "rational_point"; }
  Enclosure enclose(unsigned bits) const override {
    Rational h = dimgroup::pow2(-static_cast<long>(bits) - 1);
    return {q_ - h, q_ + h};
  }

 private:
  Rational q_;
};

inline TScalar random_tscalar(dimgroup::SeededRng& rng, std::size_t max_degree, std::int64_t bound) {
  while (true) {
    auto deg = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(max_degree)));
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = rng.rational(bound);
    TScalar p(std::move(c));
    if (!p.is_zero()) return p;
  }
}

/// Product of (x - r)^m over the given roots.
inline dimgroup::XPoly product_of_roots(const std::vector<std::pair<TScalar, unsigned>>& roots) {
  dimgroup::XPoly f(TScalar(Rational(1)));
  for (const auto& [r, m] : roots)
    for (unsigned i = 0; i < m; ++i) f *= dimgroup::XPoly(std::vector<TScalar>{-r, TScalar(Rational(1))});
  return f;
}

}  // namespace testsupport
