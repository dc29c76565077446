#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "demdesc/root_datum.hpp"

namespace demdesc {

struct SuiteResult {
  std::string name;
  bool pass;
  std::string detail;  // deterministic counts / first-failure description
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int samples = 200;
};

/**
 * Statement-by-statement relation check on randomized characters of one
 * type: Demazure idempotence and braid relations, reduced-word independence
 * of D_w, the tensor identity for invariant factors, the subword-interval
 * law, the descent/invariance equivalence, and the two independent-route
 * cross-checks. Exhaustive over the Weyl group when it is small; seeded
 * sampling otherwise. Deterministic for fixed (type, seed, samples).
 */
std::vector<SuiteResult> run_relation_suite(const RootDatumPtr& rd, const VerifyOptions& opts);

}  // namespace demdesc
