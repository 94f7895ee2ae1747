#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimgroup/error.hpp"
#include "dimgroup/linalg.hpp"
#include "dimgroup/rng.hpp"
#include "dimgroup/scalar_field.hpp"

namespace dimgroup::simplex {

/// Affine functions on a simplex with m extreme points, given by their values
/// at the extreme points. u[0] must be the constant function 1. schedule[k-1]
/// is the exponent c_k of lambda_k = t^(c_k).
struct Spec {
  std::size_t m = 1;
  std::vector<RationalVector> u;
  std::vector<std::size_t> schedule;

  std::size_t stages() const { return u.empty() ? 0 : u.size() - 1; }

  /// Fills schedule with c_k = k.
  static Spec with_default_schedule(std::size_t m, std::vector<RationalVector> u) {
    Spec s{m, std::move(u), {}};
    for (std::size_t k = 1; k <= s.stages(); ++k) s.schedule.push_back(k);
    return s;
  }
};

/// m = 3, N = 8 reference instance:
///   u0 = (1, 1, 1)      u1 = (1, 0, 0)       u2 = (0, 1, 0)
///   u3 = (0, 0, 1)      u4 = (1, 2, 3)       u5 = (1/2, -1, 2)
///   u6 = (-2, 1/3, 1)   u7 = (3, -1/2, -1)   u8 = (1/5, 4, -3)
/// with c_k = k.
inline Spec reference_spec() {
  auto r = [](long p, long q = 1) { return make_rational(p, q); };
  std::vector<RationalVector> u{
      {r(1), r(1), r(1)},      {r(1), r(0), r(0)},        {r(0), r(1), r(0)},
      {r(0), r(0), r(1)},      {r(1), r(2), r(3)},        {r(1, 2), r(-1), r(2)},
      {r(-2), r(1, 3), r(1)},  {r(3), r(-1, 2), r(-1)},   {r(1, 5), r(4), r(-3)},
  };
  return Spec::with_default_schedule(3, std::move(u));
}

/// Rational combination q_0 v_0 + ... + q_N v_N.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Rational> q) : q_(std::move(q)) {
    while (!q_.empty() && sgn(q_.back()) == 0) q_.pop_back();
  }
  static Element basis(std::size_t k) {
    std::vector<Rational> q(k + 1);
    q[k] = 1;
    return Element(std::move(q));
  }

  const std::vector<Rational>& coeffs() const { return q_; }
  bool is_zero() const { return q_.empty(); }
  /// Largest index with a nonzero coefficient; requires a nonzero element.
  std::size_t top() const {
    if (q_.empty()) throw PreconditionViolated("zero element has no top index");
    return q_.size() - 1;
  }
  Rational coeff(std::size_t i) const { return i < q_.size() ? q_[i] : Rational(0); }

  Element operator-() const { return scaled(-1); }
  friend Element operator+(const Element& a, const Element& b) {
    std::vector<Rational> q(std::max(a.q_.size(), b.q_.size()));
    for (std::size_t i = 0; i < a.q_.size(); ++i) q[i] += a.q_[i];
    for (std::size_t i = 0; i < b.q_.size(); ++i) q[i] += b.q_[i];
    return Element(std::move(q));
  }
  friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
  Element scaled(const Rational& c) const {
    auto q = q_;
    for (auto& x : q) x *= c;
    return Element(std::move(q));
  }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Rational> q_;
};

/// Result of the inductive construction up to stage N.
///
/// lambda_k = t^(c_k), v_0 = u_0, v_k = u_k - lambda_k. span(k) is the
/// Q-span V_k of 1, the trace values of v_0..v_{k-1} and the trace values of
/// u_k, held as t-power coordinate vectors. Every s-value of
/// H_{k-1} + Q u_k is a trace value of such an element, so V_k contains
/// s(H_{k-1} + Q u_k), and lambda_k outside V_k implies the stage condition.
class State {
 public:
  State(Spec spec, std::vector<TScalar> lambdas, std::vector<std::vector<TScalar>> v, std::vector<RowSpace> spans,
        std::size_t coord_dim)
      : spec_(std::move(spec)),
        lambdas_(std::move(lambdas)),
        v_(std::move(v)),
        spans_(std::move(spans)),
        coord_dim_(coord_dim) {}

  const Spec& spec() const { return spec_; }
  std::size_t m() const { return spec_.m; }
  std::size_t stages() const { return spec_.stages(); }
  /// lambda_k for 1 <= k <= N.
  const TScalar& lambda(std::size_t k) const { return lambdas_.at(k); }
  /// Value of v_i at extreme point j (0-based).
  const TScalar& v(std::size_t i, std::size_t j) const { return v_.at(i).at(j); }
  const std::vector<TScalar>& v(std::size_t i) const { return v_.at(i); }
  /// V_k for 1 <= k <= N.
  const RowSpace& span(std::size_t k) const { return spans_.at(k); }
  std::size_t coord_dim() const { return coord_dim_; }

  RationalVector coordinates(const TScalar& x) const { return t_coordinates(x, coord_dim_); }

 private:
  Spec spec_;
  std::vector<TScalar> lambdas_;           // index 0 unused
  std::vector<std::vector<TScalar>> v_;    // (N+1) x m
  std::vector<RowSpace> spans_;            // index 0 unused
  std::size_t coord_dim_;
};

/// Validates the spec and runs the construction, certifying lambda_k not in
/// V_k at every stage.
///
/// With rational values only m of the u's can be independent, so the basis
/// condition checked is that every prefix u_0..u_k has rank min(k + 1, m).
inline State build(Spec spec) {
  const std::size_t m = spec.m, n = spec.stages();
  if (m < 1) throw PreconditionViolated("simplex needs at least one extreme point");
  if (spec.u.empty()) throw PreconditionViolated("u_0 is required");
  for (const auto& row : spec.u)
    if (row.size() != m) throw PreconditionViolated("every u_i needs m values");
  for (const auto& x : spec.u[0])
    if (x != 1) throw PreconditionViolated("u_0 must be the all-ones vector");
  if (spec.schedule.size() != n) throw PreconditionViolated("schedule length must equal N");
  for (std::size_t k = 0; k < n; ++k)
    if (spec.schedule[k] < 1 || (k > 0 && spec.schedule[k] <= spec.schedule[k - 1]))
      throw PreconditionViolated("schedule must be strictly increasing positive integers");

  RowSpace us(m);
  for (std::size_t k = 0; k <= n; ++k) {
    us.insert(spec.u[k]);
    if (us.rank() < std::min(k + 1, m))
      throw DependentBasis("u_" + std::to_string(k) + " lies in the span of u_0..u_" + std::to_string(k ? k - 1 : 0));
  }

  const std::size_t dim = (n == 0 ? 0 : spec.schedule.back()) + 1;
  std::vector<TScalar> lambdas(n + 1);
  std::vector<std::vector<TScalar>> v(n + 1, std::vector<TScalar>(m));
  for (std::size_t j = 0; j < m; ++j) v[0][j] = TScalar(Rational(1));
  std::vector<RowSpace> spans(n + 1, RowSpace(dim));

  RowSpace previous(dim);  // span of 1 and the trace values of v_0..v_{k-1}
  previous.insert(t_coordinates(TScalar(Rational(1)), dim));
  for (std::size_t k = 1; k <= n; ++k) {
    lambdas[k] = t_power(spec.schedule[k - 1]);
    RowSpace vk = previous;
    for (std::size_t j = 0; j < m; ++j) vk.insert(t_coordinates(TScalar(spec.u[k][j]), dim));
    if (vk.contains(t_coordinates(lambdas[k], dim)))
      throw LambdaConditionFailed("lambda_" + std::to_string(k) + " lies in V_" + std::to_string(k));
    spans[k] = std::move(vk);
    for (std::size_t j = 0; j < m; ++j) {
      v[k][j] = TScalar(spec.u[k][j]) - lambdas[k];
      previous.insert(t_coordinates(v[k][j], dim));
    }
  }
  return State(std::move(spec), std::move(lambdas), std::move(v), std::move(spans), dim);
}

inline void check_element(const State& s, const Element& g) {
  if (g.coeffs().size() > s.stages() + 1)
    throw PreconditionViolated("element uses v_i beyond stage N");
}

/// tau_j(g), j 0-based.
inline TScalar trace(const State& s, const Element& g, std::size_t j) {
  check_element(s, g);
  if (j >= s.m()) throw PreconditionViolated("extreme point index out of range");
  TScalar acc;
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) acc += s.v(i, j).scaled(g.coeffs()[i]);
  return acc;
}

inline std::vector<TScalar> traces(const State& s, const Element& g) {
  std::vector<TScalar> out;
  for (std::size_t j = 0; j < s.m(); ++j) out.push_back(trace(s, g, j));
  return out;
}

struct Bounds {
  TScalar s_minus;
  TScalar s_plus;
  std::size_t argmin = 0;  // smallest attaining index
  std::size_t argmax = 0;
};

inline Bounds s_bounds(const ScalarField& field, const State& s, const Element& g) {
  auto tr = traces(s, g);
  Bounds b{tr[0], tr[0], 0, 0};
  for (std::size_t j = 1; j < tr.size(); ++j) {
    if (field.less(tr[j], b.s_minus)) {
      b.s_minus = tr[j];
      b.argmin = j;
    }
    if (field.less(b.s_plus, tr[j])) {
      b.s_plus = tr[j];
      b.argmax = j;
    }
  }
  return b;
}

struct CosetCheck {
  std::size_t top = 0;
  Rational top_coeff;
  TScalar minus_shifted;  // s_-(g) + q_k lambda_k
  TScalar plus_shifted;   // s_+(g) + q_k lambda_k
  bool minus_in_span = false;
  bool plus_in_span = false;

  bool passed() const { return sgn(top_coeff) != 0 && minus_in_span && plus_in_span; }
};

/// For g with top index k >= 1: s_+-(g) lie in the coset -q_k lambda_k + V_k.
/// Together with lambda_k outside V_k this puts them in a nonzero coset.
inline CosetCheck verify_coset(const ScalarField& field, const State& s, const Element& g) {
  if (g.is_zero() || g.top() == 0) throw TopIndexZero("element lies in Q v_0");
  check_element(s, g);
  const std::size_t k = g.top();
  Bounds b = s_bounds(field, s, g);
  CosetCheck c;
  c.top = k;
  c.top_coeff = g.coeff(k);
  TScalar shift = s.lambda(k).scaled(c.top_coeff);
  c.minus_shifted = b.s_minus + shift;
  c.plus_shifted = b.s_plus + shift;
  c.minus_in_span = s.span(k).contains(s.coordinates(c.minus_shifted));
  c.plus_in_span = s.span(k).contains(s.coordinates(c.plus_shifted));
  return c;
}

enum class Class { Zero, Pos, Neg, Mixed, Violation };

inline const char* to_string(Class c) {
  switch (c) {
    case Class::Zero: return "ZERO";
    case Class::Pos: return "POS";
    case Class::Neg: return "NEG";
    case Class::Mixed: return "MIXED";
    case Class::Violation: return "VIOLATION";
  }
  return "?";
}

inline Class classify(const ScalarField& field, const State& s, const Element& g) {
  if (g.is_zero()) return Class::Zero;
  bool pos = false, neg = false;
  for (const auto& x : traces(s, g)) {
    int sg = field.sign(x);
    if (sg == 0) return Class::Violation;
    pos = pos || sg > 0;
    neg = neg || sg < 0;
  }
  if (pos && neg) return Class::Mixed;
  return pos ? Class::Pos : Class::Neg;
}

/// Top index k uniform in [0, N]; q_0..q_{k-1} from SeededRng::rational(bound),
/// then q_k redrawn until nonzero.
inline Element random_element(SeededRng& rng, const State& s, std::int64_t bound) {
  const auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(s.stages())));
  std::vector<Rational> q;
  for (std::size_t i = 0; i < k; ++i) q.push_back(rng.rational(bound));
  Rational top;
  do {
    top = rng.rational(bound);
  } while (sgn(top) == 0);
  q.push_back(top);
  return Element(std::move(q));
}

/// z with tau_j(g_i) < tau_j(z) < tau_j(h_l) for every i, l, j.
///
/// Solves for coefficients hitting the midpoint of the gap at every extreme
/// point using 2^-p approximations of the trace values, rounds to multiples
/// of 2^-p and re-checks exactly; p doubles from 16 up to 4096.
inline Element interpolate(const ScalarField& field, const State& s, const Element& g1, const Element& g2,
                           const Element& h1, const Element& h2) {
  const std::size_t m = s.m(), n = s.stages() + 1;
  std::vector<TScalar> lower(m), upper(m);
  for (std::size_t j = 0; j < m; ++j) {
    TScalar a = trace(s, g1, j), b = trace(s, g2, j), c = trace(s, h1, j), d = trace(s, h2, j);
    for (const auto* lo : {&a, &b})
      for (const auto* hi : {&c, &d})
        if (!field.less(*lo, *hi))
          throw PreconditionViolated("interpolation needs tau(g_i) < tau(h_l) at extreme point " + std::to_string(j));
    lower[j] = field.less(a, b) ? b : a;
    upper[j] = field.less(c, d) ? c : d;
  }

  for (unsigned p = 16; p <= 4096; p *= 2) {
    RationalMatrix a(m, RationalVector(n));
    RationalVector rhs(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) a[j][i] = field.evaluate(s.v(i, j), p).midpoint();
      rhs[j] = field.evaluate((lower[j] + upper[j]).scaled(make_rational(1, 2)), p).midpoint();
    }
    auto x = solve(std::move(a), std::move(rhs));
    if (!x) continue;
    const Rational scale = pow2(static_cast<long>(p));
    for (auto& xi : *x) xi = make_rational(floor_of(Rational(xi * scale + Rational(1, 2))), scale.get_num());
    Element z(std::move(*x));
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      TScalar tz = trace(s, z, j);
      ok = field.less(lower[j], tz) && field.less(tz, upper[j]);
    }
    if (ok) return z;
  }
  throw NotFound("no interpolant found; the v_i may not span the affine functions (N + 1 < m)");
}

struct InterpolationProblem {
  Element g1, g2, h1, h2;
};

/// Random g1, g2, w1, w2, then h_l = w_l + K v_0 with the smallest integer K
/// (from 2^-64 enclosures) that puts every tau_j(h_l) above every tau_j(g_i).
inline InterpolationProblem random_interpolation_problem(const ScalarField& field, SeededRng& rng, const State& s,
                                                         std::int64_t bound) {
  InterpolationProblem p{random_element(rng, s, bound), random_element(rng, s, bound), random_element(rng, s, bound),
                         random_element(rng, s, bound)};
  Rational gap = 0;
  for (std::size_t j = 0; j < s.m(); ++j)
    for (const auto* g : {&p.g1, &p.g2})
      for (const auto* w : {&p.h1, &p.h2}) {
        Enclosure d = field.evaluate(trace(s, *g, j) - trace(s, *w, j), ScalarField::kStartBits);
        gap = std::max(gap, d.hi);
      }
  Element shift = Element::basis(0).scaled(Rational(floor_of(gap) + 1));
  p.h1 = p.h1 + shift;
  p.h2 = p.h2 + shift;
  return p;
}

}  // namespace dimgroup::simplex
