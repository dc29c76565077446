#include "demdesc/demazure.hpp"

#include <algorithm>
#include <unordered_set>

#include "demdesc/kernels.hpp"

namespace demdesc {

namespace {

constexpr std::size_t kSubwordLimit = 20;

void check_index(const RootDatum& rd, int i) {
  if (i < 1 || i > rd.rank())
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(rd.rank()));
}

}  // namespace

Character demazure_apply(int i, const Character& f) {
  const RootDatumPtr& rd = f.datum();
  check_index(*rd, i);
  const Weight alpha = rd->simple_root(i);
  Character out(rd);
  std::vector<Weight> string_buf;
  for (const auto& [lambda, c] : f.terms()) {
    const std::int32_t m = rd->pairing(lambda, i);
    if (m >= 0) {
      string_buf.resize(static_cast<std::size_t>(m) + 1);
      kernels::active().ray(lambda, -alpha, 0, string_buf.data(), string_buf.size());
      for (const Weight& mu : string_buf) out.add_term(mu, c);
    } else if (m <= -2) {
      string_buf.resize(static_cast<std::size_t>(-m) - 1);
      kernels::active().ray(lambda, alpha, 1, string_buf.data(), string_buf.size());
      for (const Weight& mu : string_buf) out.add_term(mu, -c);
    }
    // m == -1 contributes nothing.
  }
  return out;
}

Character demazure_oracle(int i, const Character& f) {
  const RootDatumPtr& rd = f.datum();
  check_index(*rd, i);
  const Weight alpha = rd->simple_root(i);
  const Character e_neg = Character::monomial(rd, -alpha);
  const Character numerator = f - e_neg * weyl_act(simple_reflection(rd, i), f);
  const Character denominator = Character::monomial(rd, Weight{}) - e_neg;
  return exact_divide(numerator, denominator);
}

Character demazure_word(const Word& word, const Character& f) {
  Character out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_apply(*it, out);
  return out;
}

Character demazure_w(const WeylElement& w, const Character& f) {
  require_same_datum(*w.datum(), *f.datum());
  return demazure_word(reduced_word(w), f);
}

WeylElement demazure_product(const RootDatumPtr& rd, const Word& word) {
  WeylElement w = WeylElement::identity(rd);
  for (int i : word) {
    WeylElement ws = multiply(w, simple_reflection(rd, i));
    if (ws.length() > w.length()) w = std::move(ws);
  }
  return w;
}

std::vector<WeylElement> subword_interval(const RootDatumPtr& rd, const Word& word) {
  if (word.size() > kSubwordLimit)
    throw WordTooLong("subword enumeration limited to words of length " +
                      std::to_string(kSubwordLimit) + ", got " + std::to_string(word.size()));
  for (int i : word) check_index(*rd, i);
  // Level sets of distinct prefix products: include or skip each letter.
  std::unordered_set<WeylElement, WeylHash> level{WeylElement::identity(rd)};
  for (int i : word) {
    std::unordered_set<WeylElement, WeylHash> next;
    const WeylElement s = simple_reflection(rd, i);
    for (const WeylElement& x : level) {
      next.insert(x);
      next.insert(multiply(x, s));
    }
    level = std::move(next);
  }
  std::vector<WeylElement> out(level.begin(), level.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace demdesc
