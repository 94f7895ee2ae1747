#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimgroup/error.hpp"
#include "dimgroup/scalar_field.hpp"

namespace dimgroup::ex1 {

/// STD_PLUS_E: generators e_1..e_n and E = sum alpha_j e_j (rank n + 1).
/// UNIT_PLUS_E: generators u = sum e_j and E (rank 2).
enum class GeneratorMode { StdPlusE, UnitPlusE };

inline const char* to_string(GeneratorMode m) { return m == GeneratorMode::StdPlusE ? "STD_PLUS_E" : "UNIT_PLUS_E"; }

inline GeneratorMode parse_mode(const std::string& s) {
  if (s == "STD_PLUS_E" || s == "std") return GeneratorMode::StdPlusE;
  if (s == "UNIT_PLUS_E" || s == "unit") return GeneratorMode::UnitPlusE;
  throw ParseError("unknown generator mode '" + s + "'");
}

/// Finitely generated subgroup of R^n with the coordinatewise (relative)
/// order. The pure traces are the n coordinate evaluations.
class Group {
 public:
  Group(std::vector<TScalar> alphas, GeneratorMode mode) : alphas_(std::move(alphas)), mode_(mode) {
    if (alphas_.empty()) throw PreconditionViolated("ex1 group needs n >= 1");
    for (const auto& a : alphas_)
      if (a.degree() < 1)
        throw PreconditionViolated("alpha " + to_string(a) + " is rational; each alpha must have t-degree >= 1");
  }

  /// alpha_j = t^j.
  static Group standard(std::size_t n, GeneratorMode mode) {
    std::vector<TScalar> alphas;
    for (std::size_t j = 1; j <= n; ++j) alphas.push_back(t_power(j));
    return {std::move(alphas), mode};
  }

  std::size_t n() const { return alphas_.size(); }
  const std::vector<TScalar>& alphas() const { return alphas_; }
  GeneratorMode mode() const { return mode_; }
  /// Number of integer coefficients describing an element.
  std::size_t rank() const { return mode_ == GeneratorMode::StdPlusE ? n() + 1 : 2; }

 private:
  std::vector<TScalar> alphas_;
  GeneratorMode mode_;
};

/// STD_PLUS_E: (m_1, ..., m_n, m) for sum m_j e_j + m E.
/// UNIT_PLUS_E: (q, m) for q u + m E.
struct Element {
  std::vector<std::int64_t> coeffs;

  bool is_zero() const {
    for (auto c : coeffs)
      if (c != 0) return false;
    return true;
  }
  Element operator-() const {
    Element r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
  }
  friend bool operator==(const Element&, const Element&) = default;
};

inline void check_shape(const Group& g, const Element& e) {
  if (e.coeffs.size() != g.rank())
    throw PreconditionViolated("element has " + std::to_string(e.coeffs.size()) + " coefficients, group rank is " +
                               std::to_string(g.rank()));
}

/// tau_j(g) for j = 1..n.
inline std::vector<TScalar> coordinates(const Group& group, const Element& g) {
  check_shape(group, g);
  const Rational m(static_cast<long>(g.coeffs.back()));
  std::vector<TScalar> out;
  out.reserve(group.n());
  for (std::size_t j = 0; j < group.n(); ++j) {
    const Rational base(static_cast<long>(group.mode() == GeneratorMode::StdPlusE ? g.coeffs[j] : g.coeffs[0]));
    out.push_back(TScalar(base) + group.alphas()[j].scaled(m));
  }
  return out;
}

enum class Class { Zero, Positive, Negative, Mixed, Boundary };

inline const char* to_string(Class c) {
  switch (c) {
    case Class::Zero: return "ZERO";
    case Class::Positive: return "POSITIVE";
    case Class::Negative: return "NEGATIVE";
    case Class::Mixed: return "MIXED";
    case Class::Boundary: return "BOUNDARY";
  }
  return "?";
}

/// BOUNDARY marks a nonzero element vanishing at some pure trace.
inline Class classify(const ScalarField& field, const Group& group, const Element& g) {
  bool pos = false, neg = false, zero = false;
  for (const auto& c : coordinates(group, g)) {
    int s = field.sign(c);
    pos = pos || s > 0;
    neg = neg || s < 0;
    zero = zero || s == 0;
  }
  if (!pos && !neg) return Class::Zero;
  if (zero) return Class::Boundary;
  if (pos && neg) return Class::Mixed;
  return pos ? Class::Positive : Class::Negative;
}

namespace detail {

/// Digit order 0, 1, -1, 2, -2, ...
inline std::int64_t digit_value(std::int64_t index) { return index % 2 == 1 ? (index + 1) / 2 : -(index / 2); }

}  // namespace detail

/// Visits every nonzero element with coefficients in [-bound, bound], by
/// shells of increasing sup norm; inside a shell an odometer whose first
/// coefficient turns fastest, digits ordered 0, 1, -1, 2, -2, .... Stops
/// early when the visitor returns true.
template <class Visitor>
void for_each_element(const Group& group, std::int64_t bound, Visitor&& visit) {
  const std::size_t d = group.rank();
  for (std::int64_t r = 1; r <= bound; ++r) {
    std::vector<std::int64_t> idx(d, 0);
    const std::int64_t base = 2 * r + 1;
    while (true) {
      Element e{std::vector<std::int64_t>(d)};
      std::int64_t sup = 0;
      for (std::size_t i = 0; i < d; ++i) {
        e.coeffs[i] = detail::digit_value(idx[i]);
        sup = std::max(sup, e.coeffs[i] < 0 ? -e.coeffs[i] : e.coeffs[i]);
      }
      if (sup == r && visit(e)) return;
      std::size_t i = 0;
      while (i < d && ++idx[i] == base) idx[i++] = 0;
      if (i == d) break;
    }
  }
}

/// First BOUNDARY element in scan order, if any.
inline std::optional<Element> extreme_simplicity_scan(const ScalarField& field, const Group& group,
                                                      std::int64_t bound) {
  if (bound < 1) throw PreconditionViolated("scan bound must be >= 1");
  std::optional<Element> witness;
  for_each_element(group, bound, [&](const Element& e) {
    if (classify(field, group, e) == Class::Boundary) {
      witness = e;
      return true;
    }
    return false;
  });
  return witness;
}

/// An integer N with N*g - h strictly positive in every coordinate, for a
/// POSITIVE g. N comes from 2^-64 coordinate enclosures and is re-checked
/// exactly.
inline Integer dominating_multiple(const ScalarField& field, const Group& group, const Element& g,
                                   const Element& h) {
  if (classify(field, group, g) != Class::Positive) throw PreconditionViolated("g must be POSITIVE");
  auto cg = coordinates(group, g);
  auto ch = coordinates(group, h);
  Integer n = 1;
  for (std::size_t j = 0; j < cg.size(); ++j) {
    Enclosure eg = field.evaluate(cg[j], ScalarField::kStartBits);
    Enclosure eh = field.evaluate(ch[j], ScalarField::kStartBits);
    for (Rational w = pow2(-64); sgn(eg.lo) <= 0; w *= pow2(-64)) eg = field.enclose(cg[j], w);
    Integer need = floor_of(Rational(eh.hi / eg.lo)) + 1;
    if (need > n) n = need;
  }
  for (std::size_t j = 0; j < cg.size(); ++j)
    if (field.sign(cg[j].scaled(Rational(n)) - ch[j]) <= 0)
      throw InvariantViolation("dominating multiple failed exact re-check");
  return n;
}

/// Brute-force search for the element closest to `target` in sup norm among
/// coefficients bounded by `bound`. Distances use 2^-64 enclosures, so this
/// is a probe, not a certificate.
inline std::pair<Element, Rational> nearest_element(const ScalarField& field, const Group& group,
                                                    const std::vector<Rational>& target, std::int64_t bound) {
  if (target.size() != group.n()) throw PreconditionViolated("target dimension must equal n");
  Element best{std::vector<std::int64_t>(group.rank(), 0)};
  Rational best_dist = -1;
  auto consider = [&](const Element& e) {
    auto c = coordinates(group, e);
    Rational dist = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      Rational v = field.evaluate(c[j], ScalarField::kStartBits).midpoint() - target[j];
      dist = std::max(dist, abs_of(v));
    }
    if (best_dist < 0 || dist < best_dist) {
      best_dist = dist;
      best = e;
    }
    return false;
  };
  consider(best);
  for_each_element(group, bound, consider);
  return {best, best_dist};
}

}  // namespace dimgroup::ex1
