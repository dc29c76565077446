#include "demdesc/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace demdesc::kernels {

// Defined in kernels_avx2.cpp; null when the variant is not built in.
const Ops* avx2_table();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Ops* pick_active() {
  const Ops* avx2 = avx2_table();
  if (avx2 != nullptr && !cpu_has_avx2()) avx2 = nullptr;
  if (const char* forced = std::getenv("DEMDESC_KERNELS")) {
    if (std::strcmp(forced, "scalar") == 0) return &scalar_ops();
    if (std::strcmp(forced, "avx2") == 0 && avx2 != nullptr) return avx2;
    // Unknown or unavailable request: fall through to the default choice.
  }
  return avx2 != nullptr ? avx2 : &scalar_ops();
}

}  // namespace

const Ops* avx2_ops_or_null() {
  const Ops* avx2 = avx2_table();
  return (avx2 != nullptr && cpu_has_avx2()) ? avx2 : nullptr;
}

const Ops& active() {
  static const Ops* chosen = pick_active();
  return *chosen;
}

}  // namespace demdesc::kernels
