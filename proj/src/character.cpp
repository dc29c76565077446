#include "demdesc/character.hpp"

#include <algorithm>

#include "demdesc/kernels.hpp"

namespace demdesc {

namespace {

constexpr std::size_t kDivisionStepCap = 1'000'000;

}  // namespace

Character Character::monomial(const RootDatumPtr& rd, const Weight& lambda, Int coeff) {
  Character f(rd);
  if (coeff != 0) f.terms_.emplace(lambda, std::move(coeff));
  return f;
}

Int Character::coeff(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Int(0) : it->second;
}

void Character::add_term(const Weight& lambda, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Character operator+(const Character& f, const Character& g) {
  require_same_datum(*f.datum(), *g.datum());
  Character out = f;
  for (const auto& [lambda, c] : g.terms()) out.add_term(lambda, c);
  return out;
}

Character operator-(const Character& f, const Character& g) {
  require_same_datum(*f.datum(), *g.datum());
  Character out = f;
  for (const auto& [lambda, c] : g.terms()) out.add_term(lambda, -c);
  return out;
}

Character operator-(const Character& f) {
  Character out(f.datum());
  for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, -c);
  return out;
}

Character operator*(const Character& f, const Character& g) {
  require_same_datum(*f.datum(), *g.datum());
  // Convolution: iterate the smaller support, batch-translate the larger.
  const Character& outer = f.support_size() <= g.support_size() ? f : g;
  const Character& inner = f.support_size() <= g.support_size() ? g : f;
  std::vector<Weight> keys;
  std::vector<const Int*> coeffs;
  keys.reserve(inner.support_size());
  coeffs.reserve(inner.support_size());
  for (const auto& [lambda, c] : inner.terms()) {
    keys.push_back(lambda);
    coeffs.push_back(&c);
  }
  std::vector<Weight> shifted(keys.size());
  Character out(f.datum());
  for (const auto& [lambda, c] : outer.terms()) {
    kernels::active().translate(lambda, keys.data(), shifted.data(), keys.size());
    for (std::size_t t = 0; t < shifted.size(); ++t) out.add_term(shifted[t], c * *coeffs[t]);
  }
  return out;
}

Character operator*(const Int& c, const Character& f) {
  Character out(f.datum());
  if (c == 0) return out;
  for (const auto& [lambda, fc] : f.terms()) out.add_term(lambda, c * fc);
  return out;
}

Character weyl_act(const WeylElement& w, const Character& f) {
  require_same_datum(*w.datum(), *f.datum());
  std::vector<Weight> keys;
  std::vector<const Int*> coeffs;
  keys.reserve(f.support_size());
  coeffs.reserve(f.support_size());
  for (const auto& [lambda, c] : f.terms()) {
    keys.push_back(lambda);
    coeffs.push_back(&c);
  }
  std::vector<Weight> image(keys.size());
  kernels::active().apply_columns(w.columns().data(), keys.data(), image.data(), keys.size());
  Character out(f.datum());
  // w is invertible on the lattice, so the pushforward never merges terms.
  for (std::size_t t = 0; t < image.size(); ++t) out.add_term(image[t], *coeffs[t]);
  return out;
}

bool is_invariant(const Character& f, const WeylElement& w) {
  return weyl_act(w, f) == f;
}

bool is_w_invariant(const Character& f) {
  const RootDatumPtr& rd = f.datum();
  for (int i = 1; i <= rd->rank(); ++i) {
    if (!is_invariant(f, simple_reflection(rd, i))) return false;
  }
  return true;
}

Int dimension(const Character& f) {
  Int total = 0;
  for (const auto& [lambda, c] : f.terms()) total += c;
  return total;
}

bool term_less(const RootDatum& rd, const Weight& a, const Weight& b) {
  const std::int64_t ha = rd.height(a), hb = rd.height(b);
  if (ha != hb) return ha < hb;
  return lex_less(a, b);
}

std::vector<std::pair<Weight, Int>> sorted_terms(const Character& f) {
  std::vector<std::pair<Weight, Int>> out(f.terms().begin(), f.terms().end());
  const RootDatum& rd = *f.datum();
  std::sort(out.begin(), out.end(),
            [&rd](const auto& x, const auto& y) { return term_less(rd, y.first, x.first); });
  return out;
}

std::pair<Weight, Int> leading_term(const Character& f) {
  if (f.is_zero()) throw EmptyCharacter("leading term of the zero character");
  const RootDatum& rd = *f.datum();
  auto it = f.terms().begin();
  std::pair<Weight, Int> best = *it;
  for (++it; it != f.terms().end(); ++it) {
    if (term_less(rd, best.first, it->first)) best = *it;
  }
  return best;
}

namespace {

std::pair<Weight, Int> trailing_term(const Character& f) {
  const RootDatum& rd = *f.datum();
  auto it = f.terms().begin();
  std::pair<Weight, Int> best = *it;
  for (++it; it != f.terms().end(); ++it) {
    if (term_less(rd, it->first, best.first)) best = *it;
  }
  return best;
}

}  // namespace

Character exact_divide(const Character& f, const Character& g) {
  require_same_datum(*f.datum(), *g.datum());
  if (g.is_zero()) throw DivisionByZero("division by the zero character");
  const RootDatumPtr& rd = f.datum();
  Character q(rd);
  if (f.is_zero()) return q;
  const auto [lg, cg] = leading_term(g);
  const Weight tg = trailing_term(g).first;
  // In an exact division every quotient monomial mu satisfies
  // mu + trailing(g) >= trailing(f) in the term order.
  const Weight tf = trailing_term(f).first;
  Character r = f;
  std::size_t steps = 0;
  while (!r.is_zero()) {
    const auto [lr, cr] = leading_term(r);
    if (cr % cg != 0)
      throw NotDivisible("leading coefficient " + cr.str() + " not divisible by " + cg.str());
    const Weight mu = lr - lg;
    if (term_less(*rd, mu + tg, tf))
      throw NotDivisible("quotient monomial falls below the trailing-term bound");
    if (++steps > kDivisionStepCap) throw NotDivisible("division step cap exceeded");
    const Int qc = cr / cg;
    q.add_term(mu, qc);
    for (const auto& [nu, c] : g.terms()) r.add_term(nu + mu, -qc * c);
  }
  return q;
}

Character alternating_sum(const RootDatumPtr& rd, const Weight& lambda) {
  Character out(rd);
  for (const WeylElement& w : enumerate_weyl(rd)) {
    const Int sign = (w.length() % 2 == 0) ? 1 : -1;
    out.add_term(act(w, lambda), sign);
  }
  return out;
}

}  // namespace demdesc
