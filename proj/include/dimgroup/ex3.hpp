#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dimgroup/error.hpp"
#include "dimgroup/poly_real.hpp"
#include "dimgroup/rng.hpp"

namespace dimgroup::ex3 {

/// q_0 e_0 + sum_{i>=1} q_i e_i with e_0 = 1 and e_i = x^i - t^i.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Rational> q) : q_(std::move(q)) {
    while (!q_.empty() && sgn(q_.back()) == 0) q_.pop_back();
  }

  /// e_k.
  static Element basis(std::size_t k) {
    std::vector<Rational> q(k + 1);
    q[k] = 1;
    return Element(std::move(q));
  }

  const std::vector<Rational>& coeffs() const { return q_; }
  bool is_zero() const { return q_.empty(); }
  /// True when only q_0 may be nonzero.
  bool is_constant() const { return q_.size() <= 1; }
  Element operator-() const {
    auto q = q_;
    for (auto& x : q) x = -x;
    return Element(std::move(q));
  }
  friend Element operator+(const Element& a, const Element& b) {
    std::vector<Rational> q(std::max(a.q_.size(), b.q_.size()));
    for (std::size_t i = 0; i < a.q_.size(); ++i) q[i] += a.q_[i];
    for (std::size_t i = 0; i < b.q_.size(); ++i) q[i] += b.q_[i];
    return Element(std::move(q));
  }
  Element scaled(const Rational& c) const {
    auto q = q_;
    for (auto& x : q) x *= c;
    return Element(std::move(q));
  }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Rational> q_;
};

/// Constant term q_0 - sum q_i t^i, coefficient of x^i is q_i.
inline XPoly to_poly(const Element& g) {
  const auto& q = g.coeffs();
  if (q.empty()) return {};
  std::vector<TScalar> c(q.size());
  TScalar constant(q[0]);
  for (std::size_t i = 1; i < q.size(); ++i) {
    c[i] = TScalar(q[i]);
    constant -= TScalar::monomial(q[i], i);
  }
  c[0] = std::move(constant);
  return XPoly(std::move(c));
}

/// g(x) for a scalar point x.
inline TScalar value_at(const Element& g, const TScalar& x) { return to_poly(g).evaluate(x); }

enum class Verdict { Zero, PosUnit, NegUnit, SignChanging, Violation };
inline constexpr std::array kAllVerdicts{Verdict::Zero, Verdict::PosUnit, Verdict::NegUnit, Verdict::SignChanging,
                                         Verdict::Violation};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "ZERO";
    case Verdict::PosUnit: return "POS_UNIT";
    case Verdict::NegUnit: return "NEG_UNIT";
    case Verdict::SignChanging: return "SIGN_CHANGING";
    case Verdict::Violation: return "VIOLATION";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::Zero;
  std::optional<MinSignReport> min;
  std::optional<MinSignReport> max;
};

/// Lemma 1 test on the interval: a nonzero element whose minimum or maximum
/// is exactly 0 is a VIOLATION.
inline Classification classify(const ScalarField& field, const Element& g, const DomainInterval& dom) {
  if (g.is_zero()) return {};
  XPoly f = to_poly(g);
  MinSignReport mn = extremum_sign(field, f, dom, Direction::Min);
  MinSignReport mx = extremum_sign(field, f, dom, Direction::Max);
  Verdict v;
  if (mn.verdict == ExtremumVerdict::Zero || mx.verdict == ExtremumVerdict::Zero)
    v = Verdict::Violation;
  else if (mn.verdict == ExtremumVerdict::Pos)
    v = Verdict::PosUnit;
  else if (mx.verdict == ExtremumVerdict::Neg)
    v = Verdict::NegUnit;
  else
    v = Verdict::SignChanging;
  return {v, std::move(mn), std::move(mx)};
}

enum class Side { Left, Right };

struct SensitivityWitness {
  Element element;
  DomainInterval domain;
  TScalar root;  // where the element vanishes: the endpoint t = (t^k)^(1/k)
};

/// LEFT: e_k on [t, 1], zero at the left end. RIGHT: -e_k on [0, t], zero at
/// the right end. Both are nonnegative on their interval.
inline SensitivityWitness sensitivity_witness(const ScalarField& field, std::size_t k, Side side) {
  if (k < 1) throw PreconditionViolated("sensitivity witness needs k >= 1");
  const TScalar t = t_power(1);
  if (side == Side::Left) return {Element::basis(k), DomainInterval(field, t, TScalar(Rational(1))), t};
  return {-Element::basis(k), DomainInterval(field, TScalar(), t), t};
}

/// Signs of g at rational points. For nonconstant g each value has a nonzero
/// t^i coefficient, so it is never zero.
inline std::vector<int> rational_nonvanishing_probe(const ScalarField& field, const Element& g,
                                                    const std::vector<Rational>& points) {
  if (g.is_constant()) throw ConstantElement("probe needs some q_i != 0 with i >= 1");
  std::vector<int> out;
  XPoly f = to_poly(g);
  for (const auto& r : points) {
    TScalar v = f.evaluate(TScalar(r));
    if (v.is_zero()) throw InvariantViolation("nonconstant element vanished at a rational point");
    out.push_back(field.sign(v));
  }
  return out;
}

/// q_0..q_n drawn with SeededRng::rational(bound) in index order; the zero
/// element is redrawn.
inline Element random_element(SeededRng& rng, std::size_t max_degree, std::int64_t bound) {
  while (true) {
    std::vector<Rational> q;
    for (std::size_t i = 0; i <= max_degree; ++i) q.push_back(rng.rational(bound));
    Element e(std::move(q));
    if (!e.is_zero()) return e;
  }
}

struct BatchItem {
  Element element;
  Classification result;
};

struct BatchReport {
  std::vector<BatchItem> items;
  std::array<std::size_t, kAllVerdicts.size()> counts{};

  std::size_t count(Verdict v) const { return counts[static_cast<std::size_t>(v)]; }
  std::size_t violations() const { return count(Verdict::Violation); }
};

struct BatchParams {
  std::size_t max_degree = 4;
  std::size_t count = 100;
  std::uint64_t seed = 7;
  std::int64_t coeff_bound = 10;
  unsigned threads = 1;
};

/// Classifies `count` seeded random nonzero elements on the domain. Elements
/// are drawn up front, so the result is independent of `threads`.
inline BatchReport random_batch_verify(const ScalarField& field, const BatchParams& p, const DomainInterval& dom) {
  if (p.count < 1) throw PreconditionViolated("batch count must be >= 1");
  SeededRng rng(p.seed);
  BatchReport report;
  report.items.resize(p.count);
  for (auto& item : report.items) item.element = random_element(rng, p.max_degree, p.coeff_bound);

  const unsigned threads = std::max(1u, std::min<unsigned>(p.threads, static_cast<unsigned>(p.count)));
  auto work = [&](std::size_t begin) {
    for (std::size_t i = begin; i < report.items.size(); i += threads)
      report.items[i].result = classify(field, report.items[i].element, dom);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < threads; ++w) jobs.push_back(std::async(std::launch::async, work, w));
    for (auto& j : jobs) j.get();
  }
  for (const auto& item : report.items) ++report.counts[static_cast<std::size_t>(item.result.verdict)];
  return report;
}

}  // namespace dimgroup::ex3
