#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace demdesc {

// Largest supported rank. Weights are stored zero-padded to kMaxRank int32
// lanes so that one weight is exactly one 256-bit vector register.
inline constexpr int kMaxRank = 8;

/**
 * Lattice point of the weight lattice X in fundamental-weight coordinates:
 * coordinate i-1 is the pairing with the i-th simple coroot. Lanes beyond
 * the ambient rank must stay zero; all arithmetic preserves that.
 */
struct Weight {
  alignas(32) std::array<std::int32_t, kMaxRank> v{};

  Weight() = default;
  Weight(std::initializer_list<std::int32_t> coords) {
    std::size_t k = 0;
    for (std::int32_t c : coords) {
      if (k >= static_cast<std::size_t>(kMaxRank)) break;
      v[k++] = c;
    }
  }

  std::int32_t operator[](std::size_t i) const { return v[i]; }
  std::int32_t& operator[](std::size_t i) { return v[i]; }

  bool operator==(const Weight&) const = default;

  bool is_zero() const {
    for (std::int32_t c : v)
      if (c != 0) return false;
    return true;
  }
};

inline Weight operator+(const Weight& a, const Weight& b) {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}

inline Weight operator-(const Weight& a) {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r.v[i] = -a.v[i];
  return r;
}

inline Weight scaled(const Weight& a, std::int32_t k) {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r.v[i] = a.v[i] * k;
  return r;
}

// Plain lexicographic comparison on the padded lanes; used as a
// deterministic tie-break only, never as a dominance proxy.
inline bool lex_less(const Weight& a, const Weight& b) {
  for (int i = 0; i < kMaxRank; ++i) {
    if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
  }
  return false;
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    // splitmix64 over the four 64-bit halves of the lane array.
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < kMaxRank; i += 2) {
      std::uint64_t x = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(w.v[i])) << 32) |
                        static_cast<std::uint32_t>(w.v[i + 1]);
      x += h;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      h = x ^ (x >> 31);
    }
    return static_cast<std::size_t>(h);
  }
};

std::string to_string(const Weight& w, int rank);

}  // namespace demdesc
