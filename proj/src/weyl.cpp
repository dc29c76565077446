#include "demdesc/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "demdesc/kernels.hpp"

namespace demdesc {

namespace {

int inversion_count(const RootDatum& rd, const std::array<Weight, kMaxRank>& cols) {
  const std::vector<Weight>& pos = rd.positive_roots();
  std::vector<Weight> image(pos.size());
  kernels::active().apply_columns(cols.data(), pos.data(), image.data(), pos.size());
  int inv = 0;
  for (const Weight& v : image) {
    if (rd.root_sign(v) < 0) ++inv;
  }
  return inv;
}

void check_index(const RootDatum& rd, int i) {
  if (i < 1 || i > rd.rank())
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(rd.rank()));
}

}  // namespace

WeylElement WeylElement::identity(const RootDatumPtr& rd) {
  std::array<Weight, kMaxRank> cols{};
  for (int j = 0; j < rd->rank(); ++j) cols[j][j] = 1;
  return WeylElement(rd, cols, 0);
}

WeylElement simple_reflection(const RootDatumPtr& rd, int i) {
  check_index(*rd, i);
  std::array<Weight, kMaxRank> cols{};
  for (int j = 0; j < rd->rank(); ++j) cols[j][j] = 1;
  cols[i - 1] = cols[i - 1] - rd->simple_root(i);
  return WeylElement(rd, cols, 1);
}

Weight act(const WeylElement& w, const Weight& lambda) {
  Weight out;
  kernels::active().apply_columns(w.columns().data(), &lambda, &out, 1);
  return out;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  require_same_datum(*a.datum(), *b.datum());
  std::array<Weight, kMaxRank> cols;
  kernels::active().apply_columns(a.columns().data(), b.columns().data(), cols.data(), kMaxRank);
  const int len = inversion_count(*a.datum(), cols);
  return WeylElement(a.datum(), cols, len);
}

WeylElement from_word(const RootDatumPtr& rd, const Word& word) {
  WeylElement w = WeylElement::identity(rd);
  for (int i : word) w = multiply(w, simple_reflection(rd, i));
  return w;
}

WeylElement inverse(const WeylElement& w) {
  Word word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return from_word(w.datum(), word);
}

std::vector<WeylElement> enumerate_weyl(const RootDatumPtr& rd, std::size_t cap) {
  std::vector<WeylElement> out;
  std::unordered_set<WeylElement, WeylHash> seen;
  out.push_back(WeylElement::identity(rd));
  seen.insert(out.back());
  for (std::size_t at = 0; at < out.size(); ++at) {
    const WeylElement w = out[at];
    for (int i = 1; i <= rd->rank(); ++i) {
      WeylElement u = multiply(w, simple_reflection(rd, i));
      if (seen.insert(u).second) {
        if (out.size() >= cap)
          throw GroupTooLarge("Weyl group of " + rd->tag() + " exceeds enumeration cap " +
                              std::to_string(cap));
        out.push_back(std::move(u));
      }
    }
  }
  return out;
}

WeylElement longest_element(const RootDatumPtr& rd) {
  WeylElement w = WeylElement::identity(rd);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= rd->rank(); ++i) {
      WeylElement u = multiply(w, simple_reflection(rd, i));
      if (u.length() > w.length()) {
        w = std::move(u);
        grew = true;
        break;
      }
    }
  }
  return w;
}

Word reduced_word(const WeylElement& w) {
  Word word;
  WeylElement cur = w;
  const RootDatumPtr& rd = w.datum();
  while (cur.length() > 0) {
    for (int i = 1; i <= rd->rank(); ++i) {
      WeylElement u = multiply(simple_reflection(rd, i), cur);
      if (u.length() < cur.length()) {
        word.push_back(i);
        cur = std::move(u);
        break;
      }
    }
  }
  return word;
}

namespace {

void collect_words(const WeylElement& w, Word& prefix, std::vector<Word>& out, std::size_t cap) {
  if (w.is_identity()) {
    if (out.size() >= cap)
      throw WordSpaceTooLarge("reduced-word count exceeds cap " + std::to_string(cap));
    out.push_back(prefix);
    return;
  }
  const RootDatumPtr& rd = w.datum();
  for (int i = 1; i <= rd->rank(); ++i) {
    WeylElement u = multiply(simple_reflection(rd, i), w);
    if (u.length() < w.length()) {
      prefix.push_back(i);
      collect_words(u, prefix, out, cap);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> all_reduced_words(const WeylElement& w, std::size_t cap) {
  std::vector<Word> out;
  Word prefix;
  collect_words(w, prefix, out, cap);
  return out;
}

std::vector<int> descents(const WeylElement& w, Side side) {
  std::vector<int> out;
  const RootDatumPtr& rd = w.datum();
  for (int i = 1; i <= rd->rank(); ++i) {
    if (side == Side::right) {
      // l(w s_i) < l(w) iff w(alpha_i) is a negative root.
      if (rd->root_sign(act(w, rd->simple_root(i))) < 0) out.push_back(i);
    } else {
      if (multiply(simple_reflection(rd, i), w).length() < w.length()) out.push_back(i);
    }
  }
  return out;
}

namespace {

struct PairKey {
  std::array<Weight, kMaxRank> a;
  std::array<Weight, kMaxRank> b;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    WeightHash wh;
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const Weight& c : k.a) h = h * 0x100000001b3ull ^ wh(c);
    for (const Weight& c : k.b) h = h * 0x100000001b3ull ^ wh(c);
    return h;
  }
};

bool bruhat_leq_rec(const WeylElement& v, const WeylElement& w,
                    std::unordered_map<PairKey, bool, PairKeyHash>& memo) {
  if (v.is_identity()) return true;
  if (v.length() > w.length()) return false;
  if (v == w) return true;
  if (w.is_identity()) return false;
  PairKey key{v.columns(), w.columns()};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // Lifting property: for the smallest left descent s of w,
  // v <= w iff min(v, sv) <= sw.
  const RootDatumPtr& rd = w.datum();
  int s = 0;
  for (int i = 1; i <= rd->rank(); ++i) {
    if (multiply(simple_reflection(rd, i), w).length() < w.length()) {
      s = i;
      break;
    }
  }
  const WeylElement sw = multiply(simple_reflection(rd, s), w);
  const WeylElement sv = multiply(simple_reflection(rd, s), v);
  const bool result = (sv.length() < v.length()) ? bruhat_leq_rec(sv, sw, memo)
                                                 : bruhat_leq_rec(v, sw, memo);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  require_same_datum(*v.datum(), *w.datum());
  // One memo table per type tag, guarded as a single atomic cache.
  static std::mutex mu;
  static std::unordered_map<std::string,
                            std::unordered_map<PairKey, bool, PairKeyHash>> memos;
  std::lock_guard<std::mutex> lock(mu);
  return bruhat_leq_rec(v, w, memos[v.datum()->tag()]);
}

std::vector<WeylElement> bruhat_interval(const WeylElement& w, std::size_t cap) {
  std::vector<WeylElement> out;
  for (const WeylElement& v : enumerate_weyl(w.datum(), cap)) {
    if (bruhat_leq(v, w)) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool canonical_less(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (int j = 0; j < kMaxRank; ++j) {
    if (!(a.columns()[j] == b.columns()[j])) return lex_less(a.columns()[j], b.columns()[j]);
  }
  return false;
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(word[k]);
  }
  return s;
}

Word word_from_string(const std::string& text) {
  Word word;
  if (text.empty() || text == "e") return word;
  std::size_t at = 0;
  while (at < text.size()) {
    std::size_t end = text.find(',', at);
    if (end == std::string::npos) end = text.size();
    const std::string piece = text.substr(at, end - at);
    if (piece.empty()) throw ParseError("empty index in word \"" + text + "\"");
    int value = 0;
    for (char ch : piece) {
      if (ch < '0' || ch > '9')
        throw ParseError("non-digit '" + std::string(1, ch) + "' in word \"" + text + "\"");
      value = value * 10 + (ch - '0');
      if (value > 999) throw ParseError("index out of range in word \"" + text + "\"");
    }
    word.push_back(value);
    at = end + 1;
  }
  return word;
}

std::string element_to_string(const WeylElement& w) {
  return word_to_string(reduced_word(w)) + " (length " + std::to_string(w.length()) + ")";
}

}  // namespace demdesc
