#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <unordered_map>
#include <utility>
#include <vector>

#include "demdesc/root_datum.hpp"
#include "demdesc/weyl.hpp"

namespace demdesc {

using Int = boost::multiprecision::cpp_int;

/**
 * Virtual character: finitely supported Z-valued function on the weight
 * lattice, i.e. an element of the group ring Z[X] with basis e^lambda.
 * Stored coefficients are never zero. Coefficients are arbitrary-precision;
 * everything here is exact integer arithmetic.
 */
class Character {
 public:
  using TermMap = std::unordered_map<Weight, Int, WeightHash>;

  explicit Character(RootDatumPtr rd) : rd_(std::move(rd)) {}

  static Character monomial(const RootDatumPtr& rd, const Weight& lambda, Int coeff = 1);

  const RootDatumPtr& datum() const { return rd_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Int coeff(const Weight& lambda) const;

  // Accumulates into the term map, dropping the entry if it cancels.
  void add_term(const Weight& lambda, const Int& c);

  bool operator==(const Character& o) const { return rd_->same(*o.rd_) && terms_ == o.terms_; }
  bool operator!=(const Character& o) const { return !(*this == o); }

 private:
  RootDatumPtr rd_;
  TermMap terms_;
};

Character operator+(const Character& f, const Character& g);
Character operator-(const Character& f, const Character& g);
Character operator-(const Character& f);
Character operator*(const Character& f, const Character& g);  // convolution
Character operator*(const Int& c, const Character& f);

// Pushforward along w: e^lambda -> e^{w lambda}. A ring automorphism.
Character weyl_act(const WeylElement& w, const Character& f);

bool is_invariant(const Character& f, const WeylElement& w);

// Invariance under every simple reflection (hence under all of W).
bool is_w_invariant(const Character& f);

// Sum of coefficients: the virtual dimension (evaluation at e^0 = 1).
Int dimension(const Character& f);

/**
 * Term order used for leading terms and canonical serialization: compare
 * heights <lambda, 2 rho-check> first (strictly positive on positive roots,
 * so dominance-compatible), then lexicographically. Total and
 * translation-invariant.
 */
bool term_less(const RootDatum& rd, const Weight& a, const Weight& b);

// Terms sorted descending in the term order (leading term first).
std::vector<std::pair<Weight, Int>> sorted_terms(const Character& f);

// Maximal term in the term order; EmptyCharacter on the zero character.
std::pair<Weight, Int> leading_term(const Character& f);

/**
 * Exact quotient f / g in Z[X] by iterated leading-term elimination.
 * Postcondition: exact_divide(f, g) * g == f. DivisionByZero when g = 0;
 * NotDivisible when no exact quotient exists (detected by coefficient
 * non-divisibility, a quotient monomial falling below the provable
 * trailing-term bound, or the step cap).
 */
Character exact_divide(const Character& f, const Character& g);

// sum over W of sign(w) e^{w lambda}; GroupTooLarge beyond the enumeration
// cap. Zero for lambda = 0 (rank >= 1), and s_i-antiinvariant for every i.
Character alternating_sum(const RootDatumPtr& rd, const Weight& lambda);

}  // namespace demdesc
