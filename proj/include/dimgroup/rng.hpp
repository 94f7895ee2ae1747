#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "dimgroup/rational.hpp"

namespace dimgroup {

/// Reproducible random source shared by every batch operation.
///
/// Engine: std::mt19937_64 seeded with the 64-bit seed (its output sequence
/// is fixed by the C++ standard). Integers in [lo, hi] come from rejection
/// sampling: draw x, reject x >= 2^64 - (2^64 mod r), return lo + x mod r with
/// r = hi - lo + 1. A random rational with bound B has numerator uniform in
/// [-B, B] and denominator uniform in [1, B], drawn in that order.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
    std::uint64_t x;
    do {
      x = next();
    } while (x > limit);
    return lo + static_cast<std::int64_t>(x % range);
  }

  Rational rational(std::int64_t bound) {
    std::int64_t num = uniform_int(-bound, bound);
    std::int64_t den = uniform_int(1, bound);
    return make_rational(num, den);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dimgroup
