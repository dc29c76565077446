#pragma once

#include <cstdint>
#include <random>

#include "demdesc/character.hpp"
#include "demdesc/descent.hpp"

namespace demdesc {

/**
 * Deterministic sampler shared by the verify command and the test suites:
 * mt19937_64 with explicit modulo range reduction, so identical seeds give
 * identical streams on every toolchain.
 */
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_u64() { return rng_(); }

  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  // Nonzero integer in [-bound, bound].
  std::int64_t next_nonzero(std::int64_t bound) {
    for (;;) {
      const std::int64_t c = next_int(-bound, bound);
      if (c != 0) return c;
    }
  }

  Weight random_weight(const RootDatum& rd, std::int32_t lo, std::int32_t hi) {
    Weight w;
    for (int i = 0; i < rd.rank(); ++i)
      w[i] = static_cast<std::int32_t>(next_int(lo, hi));
    return w;
  }

  // Up to max_terms exponentials with coordinates in [-4, 4] and nonzero
  // coefficients in [-9, 9]; colliding weights accumulate.
  Character random_character(const RootDatumPtr& rd, int max_terms = 12) {
    Character f(rd);
    const int terms = static_cast<int>(next_int(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      f.add_term(random_weight(*rd, -4, 4), Int(next_nonzero(9)));
    }
    return f;
  }

  // Up to max_entries dominant weights with coordinates in [0, 3] and
  // nonzero multiplicities in [-4, 4].
  GDecomposition random_decomposition(const RootDatumPtr& rd, int max_entries = 5) {
    GDecomposition d(rd);
    const int entries = static_cast<int>(next_int(1, max_entries));
    for (int t = 0; t < entries; ++t) {
      d.add_entry(random_weight(*rd, 0, 3), Int(next_nonzero(4)));
    }
    return d;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace demdesc
