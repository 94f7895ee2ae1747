#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <memory>
#include <string>
#include <string_view>

#include "dimgroup/error.hpp"
#include "dimgroup/interval.hpp"
#include "dimgroup/oracle.hpp"
#include "dimgroup/polynomial.hpp"
#include "dimgroup/rational.hpp"

namespace dimgroup {

/// Element of Q[t]; coefficient i multiplies t^i. Every trace value and every
/// coefficient of the constructions lives here.
using TScalar = Polynomial<Rational, TVar>;

inline TScalar t_power(std::size_t k) { return TScalar::variable_power(k); }

/// Canonical text: ascending powers joined by " + ", each term "p/q" or
/// "p/q*t^k". The zero element prints as "0/1".
inline std::string to_string(const TScalar& p) {
  if (p.is_zero()) return "0/1";
  std::string out;
  const auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c[k]);
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  return out;
}

namespace detail {

class TScalarParser {
 public:
  explicit TScalarParser(std::string_view s) : s_(s) {}

  TScalar parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    TScalar acc;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (!first) {
        char c = s_[pos_];
        if (c != '+' && c != '-') fail("expected '+' or '-'");
        if (c == '-') sign = -1;
        ++pos_;
        skip_ws();
      }
      acc += sign > 0 ? term() : -term();
      first = false;
    }
    return acc;
  }

 private:
  TScalar term() {
    int sign = 1;
    while (!at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      if (s_[pos_] == '-') sign = -sign;
      ++pos_;
      skip_ws();
    }
    Rational coeff = 1;
    bool has_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = rational();
      has_coeff = true;
      skip_ws();
    }
    std::size_t power = 0;
    if (!at_end() && s_[pos_] == '*') {
      if (!has_coeff) fail("'*' without a coefficient");
      ++pos_;
      skip_ws();
      if (at_end() || s_[pos_] != 't') fail("expected 't' after '*'");
    }
    if (!at_end() && s_[pos_] == 't') {
      ++pos_;
      power = 1;
      skip_ws();
      if (!at_end() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        power = std::stoul(std::string(s_.substr(start, pos_ - start)));
      }
    } else if (!has_coeff) {
      fail("expected a number or 't'");
    }
    if (sign < 0) coeff = -coeff;
    return TScalar::monomial(coeff, power);
  }

  Rational rational() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t save = pos_;
    skip_ws();
    if (!at_end() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
      Integer num(std::string(s_.substr(start, save - start)), 10);
      Integer den(std::string(s_.substr(dstart, pos_ - dstart)), 10);
      if (sgn(den) == 0) fail("zero denominator");
      return make_rational(num, den);
    }
    pos_ = save;
    return Rational(Integer(std::string(s_.substr(start, save - start)), 10));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad scalar '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Accepts the canonical form plus shorthands such as "t", "1 - t^2", "3".
inline TScalar parse_tscalar(std::string_view text) { return detail::TScalarParser(text).parse(); }

/// The ordered ring Q[t] for one concrete transcendental t. Signs are decided
/// exactly: a symbolic zero test first, then interval evaluation at 64, 128,
/// ... bits of t until the enclosure excludes zero.
class ScalarField {
 public:
  static constexpr unsigned kStartBits = 64;
  static constexpr unsigned kDefaultMaxBits = 16384;

  explicit ScalarField(std::shared_ptr<const TranscendentalOracle> oracle,
                       unsigned max_bits = kDefaultMaxBits)
      : oracle_(std::move(oracle)), max_bits_(max_bits) {
    if (!oracle_) throw PreconditionViolated("ScalarField needs an oracle");
    if (max_bits_ < kStartBits) throw PreconditionViolated("max precision must be at least 64 bits");
  }

  /// Shared default instance: t = pi - 3, 16384-bit cap.
  static const ScalarField& standard() {
    static const ScalarField field(std::make_shared<PiMinus3Oracle>());
    return field;
  }

  const TranscendentalOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const TranscendentalOracle> oracle_ptr() const { return oracle_; }
  unsigned max_bits() const { return max_bits_; }

  /// Interval value of p at the 2^-bits enclosure of t.
  Enclosure evaluate(const TScalar& p, unsigned bits) const {
    if (p.is_constant()) return Enclosure(p.coeff(0));
    return p.evaluate(oracle_->enclose(bits));
  }

  int sign(const TScalar& p) const {
    if (p.is_zero()) return 0;
    if (p.is_constant()) return sgn(p.leading());
    for (unsigned bits = kStartBits;; bits = std::min(bits * 2, max_bits_)) {
      if (int s = evaluate(p, bits).certain_sign(); s != 0) return s;
      if (bits >= max_bits_)
        throw PrecisionExhausted("sign of " + to_string(p) + " undecided at " +
                                 std::to_string(max_bits_) + " bits of " + oracle_->identifier());
    }
  }

  std::strong_ordering compare(const TScalar& a, const TScalar& b) const {
    int s = sign(a - b);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool less(const TScalar& a, const TScalar& b) const { return compare(a, b) < 0; }

  /// [lo, hi] containing p(t) with hi - lo <= width. Calls with shrinking
  /// widths return nested intervals.
  Enclosure enclose(const TScalar& p, const Rational& width) const {
    if (sgn(width) <= 0) throw PreconditionViolated("enclosure width must be positive");
    if (p.is_constant()) return Enclosure(p.coeff(0));
    for (unsigned bits = kStartBits;; bits = std::min(bits * 2, max_bits_)) {
      Enclosure e = evaluate(p, bits);
      if (e.width() <= width) return e;
      if (bits >= max_bits_)
        throw PrecisionExhausted("cannot enclose " + to_string(p) + " to width " +
                                 to_string(width) + " within " + std::to_string(max_bits_) +
                                 " bits");
    }
  }

  /// A rational strictly between a and b; requires a < b.
  Rational rational_between(const TScalar& a, const TScalar& b) const {
    if (!less(a, b)) throw PreconditionViolated("rational_between needs a < b");
    if (a.is_constant() && b.is_constant()) return (a.coeff(0) + b.coeff(0)) / 2;
    for (unsigned bits = kStartBits;; bits = std::min(bits * 2, max_bits_)) {
      Enclosure ea = evaluate(a, bits), eb = evaluate(b, bits);
      if (ea.hi < eb.lo) return (ea.hi + eb.lo) / 2;
      if (bits >= max_bits_) throw PrecisionExhausted("cannot separate " + to_string(a) + " and " + to_string(b));
    }
  }

 private:
  std::shared_ptr<const TranscendentalOracle> oracle_;
  unsigned max_bits_;
};

}  // namespace dimgroup
