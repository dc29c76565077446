#pragma once

#include <string>
#include <vector>

#include "demdesc/weyl.hpp"

namespace demdesc {

/**
 * Element of the positive braid monoid of the Weyl group, kept in
 * left-greedy (Garside) normal form: a list of non-identity Weyl elements
 * x_1 .. x_k such that every left descent of x_{j+1} is a right descent of
 * x_j. The empty list is the monoid unit. Equality of normal forms is
 * equality of monoid elements.
 */
class BraidElement {
 public:
  static BraidElement identity(const RootDatumPtr& rd);

  const std::vector<WeylElement>& factors() const { return factors_; }
  const RootDatumPtr& datum() const { return rd_; }
  bool is_identity() const { return factors_.empty(); }

  // Sum of factor lengths; additive under multiplication.
  int canonical_length() const;

  bool operator==(const BraidElement& o) const {
    return rd_->same(*o.rd_) && factors_ == o.factors_;
  }
  bool operator!=(const BraidElement& o) const { return !(*this == o); }

 private:
  BraidElement(RootDatumPtr rd, std::vector<WeylElement> factors)
      : rd_(std::move(rd)), factors_(std::move(factors)) {}

  RootDatumPtr rd_;
  std::vector<WeylElement> factors_;

  friend BraidElement t_of(const WeylElement& w);
  friend BraidElement braid_multiply(const BraidElement& a, const BraidElement& b);
};

// Canonical generator T_w attached to a Weyl element (one factor, or the
// unit for w = e).
BraidElement t_of(const WeylElement& w);

// Monoid product: concatenate factor lists, then restore normality by the
// left-greedy rewriting (u, v) -> (us, sv) at the leftmost violating pair,
// smallest violating generator first.
BraidElement braid_multiply(const BraidElement& a, const BraidElement& b);
inline BraidElement operator*(const BraidElement& a, const BraidElement& b) {
  return braid_multiply(a, b);
}

// Product of the T_{s_i} over a word in 1-based generator indices.
BraidElement braid_from_word(const RootDatumPtr& rd, const Word& word);

// True when adjacent factors satisfy the left-greedy condition and no
// factor is the identity; normal forms always pass.
bool is_left_greedy(const BraidElement& b);

// "1,2,1 | 1" with factors printed as canonical reduced words; "e" for the
// unit.
std::string braid_to_string(const BraidElement& b);

}  // namespace demdesc
