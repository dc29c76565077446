#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "demdesc/character.hpp"
#include "demdesc/demazure.hpp"

namespace demdesc {

/**
 * Thrown when a character fails the descent test: carries the first failing
 * generator index and the nonzero defect D_i(f) - f witnessing it.
 */
class NotInDescentCategory : public Error {
 public:
  NotInDescentCategory(int failing_index, Character defect)
      : Error("NotInDescentCategory",
              "counit defect at generator " + std::to_string(failing_index)),
        failing_index_(failing_index),
        defect_(std::make_shared<Character>(std::move(defect))) {}

  int failing_index() const { return failing_index_; }
  const Character& defect() const { return *defect_; }

 private:
  int failing_index_;
  std::shared_ptr<Character> defect_;
};

// D_i(f) - f: the character-level counit defect at generator i.
Character counit_defect(const Character& f, int i);

// True iff every counit defect vanishes.
bool is_descent_object(const Character& f);

/**
 * The three equivalent conditions on a character, evaluated independently:
 *   descent:   D_i f = f for every i
 *   full:      D_{w_0} f = f
 *   invariant: s_i f = f for every i (W-invariance)
 * They always agree; returning all three keeps the equivalence testable.
 */
struct TheoremEquivalences {
  bool descent;
  bool full;
  bool invariant;

  bool consistent() const { return descent == full && full == invariant; }
  bool operator==(const TheoremEquivalences&) const = default;
};

TheoremEquivalences theorem_equivalences(const Character& f);

// Character of the irreducible with highest weight lambda, computed as
// D_{w_0}(e^lambda). NotDominant unless lambda is dominant. Memoized.
Character weyl_character(const RootDatumPtr& rd, const Weight& lambda);

/**
 * Formal Z-combination of dominant highest weights: the decomposition of a
 * virtual descent object into irreducible characters.
 */
class GDecomposition {
 public:
  using EntryMap = std::unordered_map<Weight, Int, WeightHash>;

  explicit GDecomposition(RootDatumPtr rd) : rd_(std::move(rd)) {}

  const RootDatumPtr& datum() const { return rd_; }
  const EntryMap& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // NotDominant when the weight is not dominant; drops cancellations.
  void add_entry(const Weight& highest, const Int& mult);

  bool operator==(const GDecomposition& o) const {
    return rd_->same(*o.rd_) && entries_ == o.entries_;
  }
  bool operator!=(const GDecomposition& o) const { return !(*this == o); }

 private:
  RootDatumPtr rd_;
  EntryMap entries_;
};

// Entries sorted descending by the term order on highest weights.
std::vector<std::pair<Weight, Int>> sorted_entries(const GDecomposition& d);

/**
 * Greedy decomposition into irreducible characters by repeated subtraction
 * at the leading term. Throws NotInDescentCategory (with the failing index
 * and defect) unless f passes the descent test first. decompose and
 * restrict are mutually inverse.
 */
GDecomposition decompose(const Character& f);

// Sum of mult * weyl_character(highest) over the entries.
Character restrict(const GDecomposition& d);

}  // namespace demdesc
