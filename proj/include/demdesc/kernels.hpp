#pragma once

#include <cstddef>
#include <cstdint>

#include "demdesc/weight.hpp"

namespace demdesc::kernels {

/**
 * Batch kernels over int32x8 weight lanes. Every kernel has a scalar
 * reference implementation and, on x86-64 builds, an AVX2 variant; the
 * active table is chosen once at startup from CPU support and can be forced
 * with DEMDESC_KERNELS=scalar|avx2. Both variants are exact integer code
 * and are equivalence-tested against each other.
 */
struct Ops {
  const char* name;

  // out[t] = in[t] + delta
  void (*translate)(const Weight& delta, const Weight* in, Weight* out, std::size_t n);

  // out[t] = sum_j in[t][j] * cols[j]; cols is a full kMaxRank-column table.
  // This is the linear action of a Weyl-group matrix given by its columns.
  void (*apply_columns)(const Weight* cols, const Weight* in, Weight* out, std::size_t n);

  // out[t] = base + (k0 + t) * step, for t in [0, n). Generates the weight
  // string of a Demazure operator applied to one exponential.
  void (*ray)(const Weight& base, const Weight& step, std::int32_t k0, Weight* out, std::size_t n);
};

const Ops& scalar_ops();

// Null when the build has no AVX2 variant or this CPU lacks AVX2.
const Ops* avx2_ops_or_null();

// Dispatched table: AVX2 when available unless overridden by environment.
const Ops& active();

}  // namespace demdesc::kernels
