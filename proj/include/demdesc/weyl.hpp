#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "demdesc/root_datum.hpp"
#include "demdesc/weight.hpp"

namespace demdesc {

// Reduced word in 1-based simple-reflection indices.
using Word = std::vector<int>;

/**
 * Weyl-group element in its canonical faithful representation: the integer
 * matrix of its action on the weight lattice, stored column-wise (column j
 * is the image of the j-th fundamental weight, zero-padded past the rank).
 * Length is the inversion count and is recomputed on every product, so
 * equality of matrices is equality of elements.
 */
class WeylElement {
 public:
  static WeylElement identity(const RootDatumPtr& rd);

  const std::array<Weight, kMaxRank>& columns() const { return cols_; }
  int length() const { return len_; }
  const RootDatumPtr& datum() const { return rd_; }
  bool is_identity() const { return len_ == 0; }

  bool operator==(const WeylElement& o) const {
    return rd_->same(*o.rd_) && cols_ == o.cols_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

 private:
  WeylElement(RootDatumPtr rd, std::array<Weight, kMaxRank> cols, int len)
      : rd_(std::move(rd)), cols_(std::move(cols)), len_(len) {}

  RootDatumPtr rd_;
  std::array<Weight, kMaxRank> cols_;
  int len_;

  friend WeylElement simple_reflection(const RootDatumPtr& rd, int i);
  friend WeylElement multiply(const WeylElement& a, const WeylElement& b);
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    WeightHash wh;
    for (const Weight& c : w.columns()) h = h * 0x100000001b3ull ^ wh(c);
    return h;
  }
};

WeylElement simple_reflection(const RootDatumPtr& rd, int i);

Weight act(const WeylElement& w, const Weight& lambda);

// Group product; length is recomputed from the inversion count.
WeylElement multiply(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return multiply(a, b);
}

WeylElement inverse(const WeylElement& w);

WeylElement from_word(const RootDatumPtr& rd, const Word& word);

// Breadth-first enumeration over the Cayley graph; deterministic order
// (identity first, then by length). GroupTooLarge beyond cap.
std::vector<WeylElement> enumerate_weyl(const RootDatumPtr& rd, std::size_t cap = enum_cap());

WeylElement longest_element(const RootDatumPtr& rd);

// Lexicographically smallest reduced word (greedy smallest left descent).
Word reduced_word(const WeylElement& w);

// All reduced words; WordSpaceTooLarge beyond cap.
std::vector<Word> all_reduced_words(const WeylElement& w, std::size_t cap = 1'000'000);

enum class Side { left, right };

// Sorted 1-based indices i with l(s_i w) < l(w) (left) or l(w s_i) < l(w).
std::vector<int> descents(const WeylElement& w, Side side);

// Bruhat order via the lifting-property recursion, memoized process-wide.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

// {v : v <= w}, sorted by (length, matrix lex); GroupTooLarge beyond cap.
std::vector<WeylElement> bruhat_interval(const WeylElement& w, std::size_t cap = enum_cap());

// Deterministic total order: length, then lexicographic on matrix columns.
bool canonical_less(const WeylElement& a, const WeylElement& b);

std::string word_to_string(const Word& word);
Word word_from_string(const std::string& text);

// "1,2,1 (length 3)"; the identity prints as "e (length 0)".
std::string element_to_string(const WeylElement& w);

}  // namespace demdesc
