#pragma once

#include <algorithm>
#include <initializer_list>

#include "dimgroup/rational.hpp"

namespace dimgroup {

/// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is
/// inclusion-monotone: narrower inputs never give a wider result.
struct Enclosure {
  Rational lo;
  Rational hi;

  Enclosure() = default;
  Enclosure(Rational point) : lo(point), hi(std::move(point)) {}  // NOLINT
  Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
  bool excludes_zero() const { return sgn(lo) > 0 || sgn(hi) < 0; }
  /// +1 / -1 when the sign is constant on the interval, 0 otherwise.
  int certain_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend Enclosure operator-(const Enclosure& a) { return {-a.hi, -a.lo}; }
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    if (a.lo == a.hi) {
      if (sgn(a.lo) >= 0) return {a.lo * b.lo, a.lo * b.hi};
      return {a.lo * b.hi, a.lo * b.lo};
    }
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
};

}  // namespace dimgroup
