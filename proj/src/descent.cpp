#include "demdesc/descent.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace demdesc {

Character counit_defect(const Character& f, int i) {
  return demazure_apply(i, f) - f;
}

bool is_descent_object(const Character& f) {
  const RootDatumPtr& rd = f.datum();
  for (int i = 1; i <= rd->rank(); ++i) {
    if (!counit_defect(f, i).is_zero()) return false;
  }
  return true;
}

TheoremEquivalences theorem_equivalences(const Character& f) {
  TheoremEquivalences eq{};
  eq.descent = is_descent_object(f);
  eq.full = demazure_w(longest_element(f.datum()), f) == f;
  eq.invariant = is_w_invariant(f);
  return eq;
}

Character weyl_character(const RootDatumPtr& rd, const Weight& lambda) {
  if (!is_dominant(*rd, lambda))
    throw NotDominant("highest weight " + to_string(lambda, rd->rank()) + " is not dominant");
  static std::mutex mu;
  static std::map<std::pair<std::string, std::array<std::int32_t, kMaxRank>>, Character> cache;
  const auto key = std::make_pair(rd->tag(), lambda.v);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Character chi = demazure_w(longest_element(rd), Character::monomial(rd, lambda));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(chi)).first->second;
}

void GDecomposition::add_entry(const Weight& highest, const Int& mult) {
  if (!is_dominant(*rd_, highest))
    throw NotDominant("highest weight " + to_string(highest, rd_->rank()) + " is not dominant");
  if (mult == 0) return;
  auto [it, inserted] = entries_.emplace(highest, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) entries_.erase(it);
  }
}

std::vector<std::pair<Weight, Int>> sorted_entries(const GDecomposition& d) {
  std::vector<std::pair<Weight, Int>> out(d.entries().begin(), d.entries().end());
  const RootDatum& rd = *d.datum();
  std::sort(out.begin(), out.end(),
            [&rd](const auto& x, const auto& y) { return term_less(rd, y.first, x.first); });
  return out;
}

GDecomposition decompose(const Character& f) {
  const RootDatumPtr& rd = f.datum();
  for (int i = 1; i <= rd->rank(); ++i) {
    Character defect = counit_defect(f, i);
    if (!defect.is_zero()) throw NotInDescentCategory(i, std::move(defect));
  }
  GDecomposition out(rd);
  Character rest = f;
  while (!rest.is_zero()) {
    const auto [mu, c] = leading_term(rest);
    // The leading weight of a W-invariant character is dominant; a failure
    // here would mean the term order is not dominance-compatible.
    if (!is_dominant(*rd, mu))
      throw Error("Internal", "leading term " + to_string(mu, rd->rank()) +
                                  " of an invariant character is not dominant");
    out.add_entry(mu, c);
    rest = rest - c * weyl_character(rd, mu);
  }
  return out;
}

Character restrict(const GDecomposition& d) {
  Character out(d.datum());
  for (const auto& [highest, mult] : d.entries()) {
    out = out + mult * weyl_character(d.datum(), highest);
  }
  return out;
}

}  // namespace demdesc
