#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dimgroup/error.hpp"
#include "dimgroup/rational.hpp"

namespace dimgroup {

/// Variable tags keep polynomials in different indeterminates apart at the
/// type level: Q[t] scalars never mix silently with Q[x] field elements.
struct TVar {
  static constexpr char symbol = 't';
};
struct XVar {
  static constexpr char symbol = 'x';
};

namespace detail {

template <class R>
bool coeff_is_zero(const R& r) {
  if constexpr (requires { r.is_zero(); })
    return r.is_zero();
  else
    return is_zero(r);
}

}  // namespace detail

/// Dense univariate polynomial; coefficient i multiplies var^i. The
/// coefficient list never ends in a zero, so the zero polynomial is empty.
template <class R, class Var>
class Polynomial {
 public:
  using coefficient_type = R;
  using variable = Var;

  Polynomial() = default;
  Polynomial(R constant) {  // NOLINT(google-explicit-constructor)
    if (!detail::coeff_is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(R c, std::size_t k) {
    if (detail::coeff_is_zero(c)) return {};
    std::vector<R> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial variable_power(std::size_t k) { return monomial(R(Rational(1)), k); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const R& leading() const { return coeffs_.back(); }
  std::span<const R> coefficients() const { return coeffs_; }

  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  /// Multiplication by a coefficient.
  Polynomial scaled(const R& c) const {
    if (detail::coeff_is_zero(c)) return {};
    Polynomial r(*this);
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
  }

  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<R> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * R(Rational(static_cast<long>(i)));
    return Polynomial(std::move(v));
  }

  /// Horner evaluation at a point of any type that coefficients convert to.
  template <class P>
  P evaluate(const P& x) const {
    if (coeffs_.empty()) return P();
    P acc = P(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + P(coeffs_[i]);
    return acc;
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<Out> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return v;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

/// prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod b, computed without division.
template <class R, class V>
Polynomial<R, V> pseudo_remainder(const Polynomial<R, V>& a, const Polynomial<R, V>& b) {
  if (b.is_zero()) throw ZeroPolynomial("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  int e = a.degree() - b.degree() + 1;
  const R& lb = b.leading();
  Polynomial<R, V> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto t = b.shifted(static_cast<std::size_t>(r.degree() - b.degree())).scaled(r.leading());
    r = r.scaled(lb) - t;
    --e;
  }
  for (; e > 0; --e) r = r.scaled(lb);
  return r;
}

// Euclidean machinery for polynomials over Q.

template <class V>
using QPolynomial = Polynomial<Rational, V>;

template <class V>
std::pair<QPolynomial<V>, QPolynomial<V>> divmod(const QPolynomial<V>& a, const QPolynomial<V>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  const Rational& lb = b.leading();
  const auto bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational c = r[static_cast<std::size_t>(k + b.degree())] / lb;
    q[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= c * bc[j];
  }
  r.resize(static_cast<std::size_t>(b.degree()));
  return {QPolynomial<V>(std::move(q)), QPolynomial<V>(std::move(r))};
}

template <class V>
QPolynomial<V> make_monic(const QPolynomial<V>& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1 / p.leading()));
}

/// Monic gcd over Q; gcd(0, 0) = 0.
template <class V>
QPolynomial<V> gcd(QPolynomial<V> a, QPolynomial<V> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class V>
struct XgcdResult {
  QPolynomial<V> gcd;  // monic
  QPolynomial<V> s;    // s*a + t*b = gcd
  QPolynomial<V> t;
};

template <class V>
XgcdResult<V> xgcd(const QPolynomial<V>& a, const QPolynomial<V>& b) {
  QPolynomial<V> r0 = a, r1 = b;
  QPolynomial<V> s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// a / b, throwing InvariantViolation when b does not divide a.
template <class V>
QPolynomial<V> divide_exact(const QPolynomial<V>& a, const QPolynomial<V>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("inexact polynomial division over Q");
  return q;
}

}  // namespace dimgroup
