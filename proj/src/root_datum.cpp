#include "demdesc/root_datum.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace demdesc {

namespace {

using CartanTable = std::array<std::array<std::int32_t, kMaxRank>, kMaxRank>;

void check_rank(Series s, int rank) {
  int lo = 0, hi = 0;
  switch (s) {
    case Series::A: lo = 1; hi = kMaxRank; break;
    case Series::B: lo = 2; hi = kMaxRank; break;
    case Series::C: lo = 2; hi = kMaxRank; break;
    case Series::D: lo = 3; hi = kMaxRank; break;
    case Series::E: lo = 6; hi = 8; break;
    case Series::F: lo = 4; hi = 4; break;
    case Series::G: lo = 2; hi = 2; break;
  }
  if (rank < lo || rank > hi) {
    throw InvalidType(std::string(1, static_cast<char>(s)) + std::to_string(rank) +
                      " is not a supported type (rank range " + std::to_string(lo) + ".." +
                      std::to_string(hi) + ")");
  }
}

// cartan[i][j] = <alpha_j, alpha_i-check>, 0-based here.
CartanTable build_cartan(Series s, int n) {
  CartanTable c{};
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) {  // single bond, 0-based
    c[i][j] = -1;
    c[j][i] = -1;
  };
  switch (s) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Series::B:
      // alpha_n short: <alpha_{n-1}, alpha_n-check> = -2.
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Series::C:
      // alpha_n long: <alpha_n, alpha_{n-1}-check> = -2.
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Series::E:
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Series::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      c[2][1] = -2;  // alpha_3 short
      break;
    case Series::G:
      // alpha_1 long, alpha_2 short: rows (2,-1) and (-3,2).
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

// Positive-root closure: saturate the simple roots under simple reflections,
// keeping roots whose simple-root coefficients stay nonnegative. Tracks both
// fundamental-weight coordinates and simple-root coefficients.
struct ClosureRoot {
  Weight omega;   // fundamental-weight coordinates
  Weight simple;  // coefficients over the simple roots
};

std::vector<ClosureRoot> positive_closure(const CartanTable& cartan, int n) {
  std::vector<ClosureRoot> out;
  std::unordered_set<Weight, WeightHash> seen;
  for (int i = 0; i < n; ++i) {
    ClosureRoot r;
    for (int j = 0; j < n; ++j) r.omega[j] = cartan[j][i];
    r.simple[i] = 1;
    if (seen.insert(r.omega).second) out.push_back(r);
  }
  for (std::size_t at = 0; at < out.size(); ++at) {
    for (int i = 0; i < n; ++i) {
      const ClosureRoot r = out[at];
      const std::int32_t m = r.omega[i];
      ClosureRoot refl;
      Weight alpha;
      for (int j = 0; j < n; ++j) alpha[j] = cartan[j][i];
      refl.omega = r.omega - scaled(alpha, m);
      refl.simple = r.simple;
      refl.simple[i] -= m;
      bool positive = true;
      for (int j = 0; j < n; ++j)
        if (refl.simple[j] < 0) positive = false;
      if (!positive) continue;
      if (seen.insert(refl.omega).second) out.push_back(refl);
    }
  }
  std::sort(out.begin(), out.end(), [](const ClosureRoot& a, const ClosureRoot& b) {
    std::int64_t ha = 0, hb = 0;
    for (int j = 0; j < kMaxRank; ++j) {
      ha += a.simple[j];
      hb += b.simple[j];
    }
    if (ha != hb) return ha < hb;
    return lex_less(a.omega, b.omega);
  });
  return out;
}

std::atomic<std::size_t> g_enum_cap{1'000'000};

}  // namespace

std::size_t enum_cap() { return g_enum_cap.load(); }
void set_enum_cap(std::size_t cap) { g_enum_cap.store(cap); }

RootDatum::RootDatum(Series series, int rank) : series_(series), rank_(rank) {
  tag_ = std::string(1, static_cast<char>(series)) + std::to_string(rank);
  cartan_ = build_cartan(series, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) simple_roots_[i][j] = cartan_[j][i];
  }
  const auto closure = positive_closure(cartan_, rank);
  positive_roots_.reserve(closure.size());
  for (std::size_t k = 0; k < closure.size(); ++k) {
    positive_roots_.push_back(closure[k].omega);
    positive_index_.emplace(closure[k].omega, static_cast<int>(k));
  }
  for (int i = 0; i < rank; ++i) rho_[i] = 1;
  // 2 rho-check = sum of the positive coroots; the coroots are the positive
  // roots of the dual datum (transposed Cartan matrix), and their
  // simple-coroot coefficients come out of the same closure.
  CartanTable dual{};
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) dual[i][j] = cartan_[j][i];
  for (const ClosureRoot& cr : positive_closure(dual, rank)) {
    for (int i = 0; i < rank; ++i) dual_height_[i] += cr.simple[i];
  }
}

std::shared_ptr<const RootDatum> RootDatum::create(Series series, int rank) {
  check_rank(series, rank);
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::shared_ptr<const RootDatum>> interned;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<char>(series), rank);
  auto it = interned.find(key);
  if (it != interned.end()) return it->second;
  auto rd = std::shared_ptr<const RootDatum>(new RootDatum(series, rank));
  interned.emplace(key, rd);
  return rd;
}

std::shared_ptr<const RootDatum> RootDatum::from_tag(const std::string& tag) {
  if (tag.size() < 2) throw InvalidType("type tag too short: \"" + tag + "\"");
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0])));
  if (s < 'A' || s > 'G') throw InvalidType("unknown series in tag \"" + tag + "\"");
  int rank = 0;
  for (std::size_t k = 1; k < tag.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(tag[k])))
      throw InvalidType("malformed rank in tag \"" + tag + "\"");
    rank = rank * 10 + (tag[k] - '0');
    if (rank > 99) throw InvalidType("rank out of range in tag \"" + tag + "\"");
  }
  return create(static_cast<Series>(s), rank);
}

std::int32_t RootDatum::cartan(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_)
    throw IndexOutOfRange("cartan index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside 1.." + std::to_string(rank_));
  return cartan_[i - 1][j - 1];
}

const Weight& RootDatum::simple_root(int i) const {
  if (i < 1 || i > rank_)
    throw IndexOutOfRange("simple root index " + std::to_string(i) + " outside 1.." +
                          std::to_string(rank_));
  return simple_roots_[i - 1];
}

std::int32_t RootDatum::pairing(const Weight& lambda, int i) const {
  if (i < 1 || i > rank_)
    throw IndexOutOfRange("coroot index " + std::to_string(i) + " outside 1.." +
                          std::to_string(rank_));
  return lambda[i - 1];
}

std::int64_t RootDatum::height(const Weight& lambda) const {
  std::int64_t h = 0;
  for (int i = 0; i < rank_; ++i) h += dual_height_[i] * lambda[i];
  return h;
}

int RootDatum::root_sign(const Weight& v) const {
  if (positive_index_.count(v)) return 1;
  if (positive_index_.count(-v)) return -1;
  return 0;
}

bool is_dominant(const RootDatum& rd, const Weight& lambda) {
  for (int i = 0; i < rd.rank(); ++i)
    if (lambda[i] < 0) return false;
  return true;
}

void require_same_datum(const RootDatum& a, const RootDatum& b) {
  if (!a.same(b))
    throw RankMismatch("root datum mismatch: " + a.tag() + " vs " + b.tag());
}

std::string to_string(const Weight& w, int rank) {
  std::string s = "(";
  for (int i = 0; i < rank; ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  s += ")";
  return s;
}

}  // namespace demdesc
