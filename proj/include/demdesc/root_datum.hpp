#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "demdesc/errors.hpp"
#include "demdesc/weight.hpp"

namespace demdesc {

enum class Series : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

/**
 * Semisimple simply connected root datum of a fixed Cartan type: the weight
 * lattice X = Z^rank in fundamental-weight coordinates together with the
 * Cartan matrix, the positive roots, and a dominance-compatible height
 * functional. Immutable after construction; instances are interned, so one
 * tag always yields the same shared object.
 *
 * Conventions: cartan(i, j) = <alpha_j, alpha_i-check>, so column j holds
 * the fundamental-weight coordinates of alpha_j. Node numbering follows
 * Bourbaki for series A..F; for G2 the nodes are ordered so that
 * cartan(1, 2) = -1 and cartan(2, 1) = -3 (alpha_1 long, alpha_2 short).
 * Supported ranks: A n>=1, B n>=2, C n>=2, D n>=3, E 6..8, F 4, G 2,
 * all with rank <= 8.
 */
class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> create(Series series, int rank);

  // Parses a tag like "A2" or "g2" (case-insensitive). InvalidType on
  // unknown series or unsupported rank.
  static std::shared_ptr<const RootDatum> from_tag(const std::string& tag);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  const std::string& tag() const { return tag_; }

  // 1-based entries of the Cartan matrix.
  std::int32_t cartan(int i, int j) const;

  // alpha_i in fundamental-weight coordinates (column i of the Cartan
  // matrix), 1-based.
  const Weight& simple_root(int i) const;

  // <lambda, alpha_i-check> = coordinate i of lambda, 1-based.
  std::int32_t pairing(const Weight& lambda, int i) const;

  // All positive roots in fundamental-weight coordinates, sorted by root
  // height (sum of simple-root coefficients), then lexicographically.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }

  // Half the sum of the positive roots: the all-ones weight.
  const Weight& rho() const { return rho_; }

  // <lambda, 2 rho-check>, strictly positive on every positive root; the
  // grading used by the character term order.
  std::int64_t height(const Weight& lambda) const;

  // +1 if v is a positive root, -1 if a negative root, 0 otherwise.
  int root_sign(const Weight& v) const;

  bool same(const RootDatum& other) const {
    return series_ == other.series_ && rank_ == other.rank_;
  }

  RootDatum(const RootDatum&) = delete;
  RootDatum& operator=(const RootDatum&) = delete;

 private:
  RootDatum(Series series, int rank);

  Series series_;
  int rank_;
  std::string tag_;
  std::array<std::array<std::int32_t, kMaxRank>, kMaxRank> cartan_{};
  std::array<Weight, kMaxRank> simple_roots_{};
  std::vector<Weight> positive_roots_;
  std::unordered_map<Weight, int, WeightHash> positive_index_;
  Weight rho_;
  std::array<std::int64_t, kMaxRank> dual_height_{};  // coefficients of 2 rho-check
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

bool is_dominant(const RootDatum& rd, const Weight& lambda);

// Throws RankMismatch unless both arguments carry the same type tag.
void require_same_datum(const RootDatum& a, const RootDatum& b);

// Process-wide Weyl-group enumeration cap (default 1,000,000 elements). The
// CLI seeds it from the DEMAZURE_ENUM_CAP environment variable.
std::size_t enum_cap();
void set_enum_cap(std::size_t cap);

}  // namespace demdesc
