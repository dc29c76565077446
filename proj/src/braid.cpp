#include "demdesc/braid.hpp"

#include <utility>

namespace demdesc {

namespace {

// Smallest generator index witnessing a normality violation of the adjacent
// pair (u, v): an s in the left descents of v with l(us) > l(u). Zero when
// the pair is normal.
int violating_generator(const WeylElement& u, const WeylElement& v) {
  const RootDatumPtr& rd = u.datum();
  for (int i = 1; i <= rd->rank(); ++i) {
    const WeylElement s = simple_reflection(rd, i);
    if (multiply(s, v).length() >= v.length()) continue;  // not a left descent of v
    if (multiply(u, s).length() > u.length()) return i;
  }
  return 0;
}

void normalize(const RootDatumPtr& rd, std::vector<WeylElement>& f) {
  for (std::size_t j = 0; j < f.size();) {
    if (f[j].is_identity())
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
    else
      ++j;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < f.size(); ++j) {
      const int s = violating_generator(f[j], f[j + 1]);
      if (s == 0) continue;
      const WeylElement refl = simple_reflection(rd, s);
      f[j] = multiply(f[j], refl);
      f[j + 1] = multiply(refl, f[j + 1]);
      if (f[j + 1].is_identity()) f.erase(f.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      changed = true;
      break;
    }
  }
}

}  // namespace

BraidElement BraidElement::identity(const RootDatumPtr& rd) {
  return BraidElement(rd, {});
}

int BraidElement::canonical_length() const {
  int total = 0;
  for (const WeylElement& x : factors_) total += x.length();
  return total;
}

BraidElement t_of(const WeylElement& w) {
  std::vector<WeylElement> factors;
  if (!w.is_identity()) factors.push_back(w);
  return BraidElement(w.datum(), std::move(factors));
}

BraidElement braid_multiply(const BraidElement& a, const BraidElement& b) {
  require_same_datum(*a.datum(), *b.datum());
  std::vector<WeylElement> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  normalize(a.datum(), factors);
  return BraidElement(a.datum(), std::move(factors));
}

BraidElement braid_from_word(const RootDatumPtr& rd, const Word& word) {
  BraidElement out = BraidElement::identity(rd);
  for (int i : word) out = braid_multiply(out, t_of(simple_reflection(rd, i)));
  return out;
}

bool is_left_greedy(const BraidElement& b) {
  const std::vector<WeylElement>& f = b.factors();
  for (const WeylElement& x : f)
    if (x.is_identity()) return false;
  for (std::size_t j = 0; j + 1 < f.size(); ++j) {
    if (violating_generator(f[j], f[j + 1]) != 0) return false;
  }
  return true;
}

std::string braid_to_string(const BraidElement& b) {
  if (b.is_identity()) return "e";
  std::string s;
  for (std::size_t j = 0; j < b.factors().size(); ++j) {
    if (j) s += " | ";
    s += word_to_string(reduced_word(b.factors()[j]));
  }
  return s;
}

}  // namespace demdesc
