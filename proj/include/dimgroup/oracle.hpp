#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include "dimgroup/error.hpp"
#include "dimgroup/interval.hpp"
#include "dimgroup/rational.hpp"

namespace dimgroup {

/// Source of rational enclosures for a fixed real number t.
///
/// Contract: enclose(bits) returns an interval of width at most 2^-bits that
/// contains t in its interior, and the intervals handed out over the lifetime
/// of the oracle are nested (a later answer at the same or a finer request
/// lies inside every earlier answer at a coarser or equal request).
/// Implementations are safe to share between threads.
///
/// The library assumes t is transcendental and lies in (0, 1). That is not
/// checkable; a custom oracle means the caller asserts it. An algebraic t
/// shows up as PrecisionExhausted once some sign query cannot be decided.
class TranscendentalOracle {
 public:
  virtual ~TranscendentalOracle() = default;
  virtual std::string identifier() const = 0;
  virtual Enclosure enclose(unsigned bits) const = 0;
};

namespace detail {

inline Enclosure round_outward(const Enclosure& e, unsigned bits) {
  Integer scale;
  Integer one = 1;
  mpz_mul_2exp(scale.get_mpz_t(), one.get_mpz_t(), bits);
  Rational lo = e.lo * scale, hi = e.hi * scale;
  return {make_rational(floor_of(lo), scale), make_rational(ceil_of(hi), scale)};
}

}  // namespace detail

/// Keeps one master enclosure, refined by intersection, and answers every
/// request by rounding it outward to a dyadic grid. Rounding a nested family
/// outward keeps it nested, so callers see a monotone sequence even when they
/// ask for coarse and fine widths in any order.
class CachingOracle : public TranscendentalOracle {
 public:
  Enclosure enclose(unsigned bits) const final {
    const unsigned need = bits + 2;
    std::lock_guard lock(mutex_);
    if (!master_ || master_bits_ < need) {
      unsigned target = std::max(need, master_bits_ * 2);
      Enclosure fresh = compute(target);
      if (!(fresh.lo < fresh.hi) || fresh.width() > pow2(-static_cast<long>(target)))
        throw InvariantViolation(identifier() + ": enclosure misses its width goal");
      if (master_) {
        fresh.lo = std::max(fresh.lo, master_->lo);
        fresh.hi = std::min(fresh.hi, master_->hi);
        if (fresh.lo > fresh.hi) throw InvariantViolation(identifier() + ": enclosures not nested");
      }
      master_ = fresh;
      master_bits_ = target;
    }
    return detail::round_outward(*master_, need);
  }

 protected:
  /// Enclosure of width at most 2^-bits with t strictly inside.
  virtual Enclosure compute(unsigned bits) const = 0;

 private:
  mutable std::mutex mutex_;
  mutable std::optional<Enclosure> master_;
  mutable unsigned master_bits_ = 0;
};

namespace detail {

/// floor(2^w * arctan(1/x)) up to an error of less than 2*terms + 1 units,
/// using floor(floor(a/b)/c) = floor(a/(bc)) so every power term is exact.
inline Integer arctan_inverse_fixed(unsigned long x, unsigned w, unsigned long& terms) {
  Integer power;
  Integer one = 1;
  mpz_mul_2exp(power.get_mpz_t(), one.get_mpz_t(), w);
  power /= x;
  const unsigned long x2 = x * x;
  Integer sum = 0;
  terms = 0;
  for (unsigned long k = 0; sgn(power) != 0; ++k) {
    Integer term = power / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power /= x2;
    ++terms;
  }
  return sum;
}

}  // namespace detail

/// t = pi - 3, computed from Machin's formula pi = 16 atan(1/5) - 4 atan(1/239)
/// in fixed point with a rigorous error bound.
class PiMinus3Oracle final : public CachingOracle {
 public:
  std::string identifier() const override { return "pi_minus_3"; }

  /// Enclosure of pi itself with width at most 2^-bits.
  static Enclosure pi_enclosure(unsigned bits) {
    const unsigned w = bits + 48;
    unsigned long n5 = 0, n239 = 0;
    Integer a5 = detail::arctan_inverse_fixed(5, w, n5);
    Integer a239 = detail::arctan_inverse_fixed(239, w, n239);
    Integer s = 16 * a5 - 4 * a239;
    Integer err = 16 * (2 * n5 + 1) + 4 * (2 * n239 + 1) + 1;
    Integer scale;
    Integer one = 1;
    mpz_mul_2exp(scale.get_mpz_t(), one.get_mpz_t(), w);
    Enclosure e{make_rational(Integer(s - err), scale), make_rational(Integer(s + err), scale)};
    if (e.width() > pow2(-static_cast<long>(bits)))
      throw InvariantViolation("pi enclosure error bound exceeds the guard bits");
    return e;
  }

 protected:
  Enclosure compute(unsigned bits) const override {
    Enclosure pi = pi_enclosure(bits);
    return {pi.lo - 3, pi.hi - 3};
  }
};

/// t read from a decimal expansion "0.d1d2d3..." (truncated, not rounded).
/// k digits give the enclosure [d, d + 10^-k]; requests beyond the available
/// digits raise PrecisionExhausted.
class DecimalDigitsOracle final : public CachingOracle {
 public:
  DecimalDigitsOracle(std::string identifier, std::string expansion)
      : identifier_(std::move(identifier)) {
    std::string s;
    for (char c : expansion)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.rfind("0.", 0) != 0 || s.size() < 3)
      throw ParseError("digit expansion must have the form 0.ddd...");
    digits_ = s.substr(2);
    for (char c : digits_)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("non-digit in expansion");
  }

  static std::shared_ptr<DecimalDigitsOracle> from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open digits file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return std::make_shared<DecimalDigitsOracle>("digits_file:" + path, buf.str());
  }

  std::string identifier() const override { return identifier_; }
  std::size_t digit_count() const { return digits_.size(); }

 protected:
  Enclosure compute(unsigned bits) const override {
    // 10^-k <= 2^-bits once k >= bits * log10(2); 0.30103 > log10(2).
    std::size_t k = static_cast<std::size_t>(bits * 0.30103) + 2;
    if (k > digits_.size())
      throw PrecisionExhausted(identifier_ + ": " + std::to_string(digits_.size()) +
                               " digits cannot reach 2^-" + std::to_string(bits));
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
    Integer num(digits_.substr(0, k), 10);
    return {make_rational(num, den), make_rational(Integer(num + 1), den)};
  }

 private:
  std::string identifier_;
  std::string digits_;
};

}  // namespace dimgroup
