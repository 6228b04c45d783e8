#pragma once

// Seeded randomness with cross-platform stable output: mt19937_64 is fully
// specified by the standard, and value reduction uses plain modulo so streams
// replay identically everywhere.

#include <cstdint>
#include <random>

#include "tpbasis/rational.hpp"

namespace tpb {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // inclusive bounds
  long uniform_long(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  bool coin() { return (gen_() & 1u) != 0; }

  // multiplier draw: k/1024 for uniform k with k/1024 <= alpha_max < 1.
  // The fixed denominator keeps composed matrices' entry sizes bounded.
  Rational alpha(const Rational& alpha_max) {
    if (sgn(alpha_max) < 0 || alpha_max >= 1)
      throw std::invalid_argument("alpha_max outside [0,1)");
    Rational scaled = alpha_max * 1024;
    Integer kmax = scaled.get_num() / scaled.get_den();  // floor, nonnegative
    long m = kmax.get_si();
    return rat(uniform_long(0, m), 1024);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tpb
