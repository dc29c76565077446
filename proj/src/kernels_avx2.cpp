#include "demdesc/kernels.hpp"

#if defined(DEMDESC_HAVE_AVX2)

#include <immintrin.h>

namespace demdesc::kernels {

namespace {

inline __m256i load_w(const Weight& w) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(w.v.data()));
}

inline void store_w(Weight& w, __m256i x) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(w.v.data()), x);
}

void translate_avx2(const Weight& delta, const Weight* in, Weight* out, std::size_t n) {
  const __m256i d = load_w(delta);
  for (std::size_t t = 0; t < n; ++t) {
    store_w(out[t], _mm256_add_epi32(load_w(in[t]), d));
  }
}

void apply_columns_avx2(const Weight* cols, const Weight* in, Weight* out, std::size_t n) {
  __m256i c[kMaxRank];
  for (int j = 0; j < kMaxRank; ++j) c[j] = load_w(cols[j]);
  for (std::size_t t = 0; t < n; ++t) {
    __m256i acc = _mm256_setzero_si256();
    for (int j = 0; j < kMaxRank; ++j) {
      const __m256i lane = _mm256_set1_epi32(in[t].v[j]);
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(lane, c[j]));
    }
    store_w(out[t], acc);
  }
}

void ray_avx2(const Weight& base, const Weight& step, std::int32_t k0, Weight* out,
              std::size_t n) {
  const __m256i s = load_w(step);
  __m256i acc = _mm256_add_epi32(load_w(base), _mm256_mullo_epi32(_mm256_set1_epi32(k0), s));
  for (std::size_t t = 0; t < n; ++t) {
    store_w(out[t], acc);
    acc = _mm256_add_epi32(acc, s);
  }
}

}  // namespace

const Ops* avx2_table() {
  static const Ops table{"avx2", &translate_avx2, &apply_columns_avx2, &ray_avx2};
  return &table;
}

}  // namespace demdesc::kernels

#else

namespace demdesc::kernels {

const Ops* avx2_table() { return nullptr; }

}  // namespace demdesc::kernels

#endif
