#include "demdesc/kernels.hpp"

namespace demdesc::kernels {

namespace {

void translate_scalar(const Weight& delta, const Weight* in, Weight* out, std::size_t n) {
  for (std::size_t t = 0; t < n; ++t) {
    for (int i = 0; i < kMaxRank; ++i) out[t].v[i] = in[t].v[i] + delta.v[i];
  }
}

void apply_columns_scalar(const Weight* cols, const Weight* in, Weight* out, std::size_t n) {
  for (std::size_t t = 0; t < n; ++t) {
    Weight acc;
    for (int j = 0; j < kMaxRank; ++j) {
      const std::int32_t c = in[t].v[j];
      if (c == 0) continue;
      for (int i = 0; i < kMaxRank; ++i) acc.v[i] += c * cols[j].v[i];
    }
    out[t] = acc;
  }
}

void ray_scalar(const Weight& base, const Weight& step, std::int32_t k0, Weight* out,
                std::size_t n) {
  for (std::size_t t = 0; t < n; ++t) {
    const std::int32_t k = k0 + static_cast<std::int32_t>(t);
    for (int i = 0; i < kMaxRank; ++i) out[t].v[i] = base.v[i] + k * step.v[i];
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{"scalar", &translate_scalar, &apply_columns_scalar, &ray_scalar};
  return table;
}

}  // namespace demdesc::kernels
