#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "demdesc/kernels.hpp"
#include "demdesc/sampling.hpp"

using namespace demdesc;

namespace {

std::vector<Weight> random_batch(Sampler& s, std::size_t n, std::int32_t bound) {
  std::vector<Weight> batch(n);
  for (Weight& w : batch) {
    for (int i = 0; i < kMaxRank; ++i)
      w[i] = static_cast<std::int32_t>(s.next_int(-bound, bound));
  }
  return batch;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar translate adds the delta to every lane") {
  const auto& ops = kernels::scalar_ops();
  const Weight delta{1, -2, 3, 0, 0, 0, 0, -1};
  std::vector<Weight> in = {Weight{0, 0, 0, 0, 0, 0, 0, 0}, Weight{5, 5, 5, 5, 5, 5, 5, 5}};
  std::vector<Weight> out(in.size());
  ops.translate(delta, in.data(), out.data(), in.size());
  CHECK(out[0] == delta);
  CHECK(out[1] == Weight{6, 3, 8, 5, 5, 5, 5, 4});
}

TEST_CASE("scalar apply_columns is matrix action on coordinates") {
  // Columns of the A2 reflection s_1: omega_1 -> omega_1 - alpha_1.
  std::array<Weight, kMaxRank> cols{};
  cols[0] = Weight{-1, 1};  // image of omega_1
  cols[1] = Weight{0, 1};   // image of omega_2
  const Weight lambda{2, 3};
  Weight out;
  kernels::scalar_ops().apply_columns(cols.data(), &lambda, &out, 1);
  CHECK(out == Weight{-2, 5});
}

TEST_CASE("scalar ray generates an arithmetic progression of weights") {
  const Weight base{1, 0};
  const Weight step{-2, 1};
  std::array<Weight, 3> out;
  kernels::scalar_ops().ray(base, step, 2, out.data(), out.size());
  CHECK(out[0] == Weight{-3, 2});
  CHECK(out[1] == Weight{-5, 3});
  CHECK(out[2] == Weight{-7, 4});
}

TEST_CASE("vector variant matches the scalar reference on random batches") {
  const kernels::Ops* vec = kernels::avx2_ops_or_null();
  if (vec == nullptr) {
    MESSAGE("no vector kernel variant on this build/CPU; scalar only");
    return;
  }
  Sampler s(20260818);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = static_cast<std::size_t>(s.next_int(1, 37));
    const auto in = random_batch(s, n, 1000);
    std::vector<Weight> a(n), b(n);

    Weight delta;
    for (int i = 0; i < kMaxRank; ++i)
      delta[i] = static_cast<std::int32_t>(s.next_int(-1000, 1000));
    kernels::scalar_ops().translate(delta, in.data(), a.data(), n);
    vec->translate(delta, in.data(), b.data(), n);
    CHECK(a == b);

    std::array<Weight, kMaxRank> cols{};
    for (int j = 0; j < kMaxRank; ++j)
      for (int i = 0; i < kMaxRank; ++i)
        cols[j][i] = static_cast<std::int32_t>(s.next_int(-3, 3));
    kernels::scalar_ops().apply_columns(cols.data(), in.data(), a.data(), n);
    vec->apply_columns(cols.data(), in.data(), b.data(), n);
    CHECK(a == b);

    Weight base = in[0];
    Weight step;
    for (int i = 0; i < kMaxRank; ++i)
      step[i] = static_cast<std::int32_t>(s.next_int(-5, 5));
    const std::int32_t k0 = static_cast<std::int32_t>(s.next_int(-4, 4));
    kernels::scalar_ops().ray(base, step, k0, a.data(), n);
    vec->ray(base, step, k0, b.data(), n);
    CHECK(a == b);
  }
}

TEST_CASE("active table honors the DEMDESC_KERNELS override") {
  // The dispatcher reads the environment once at startup, so here we only
  // check that the chosen table is one of the two real tables.
  const kernels::Ops& table = kernels::active();
  const bool is_scalar = table.translate == kernels::scalar_ops().translate;
  const kernels::Ops* vec = kernels::avx2_ops_or_null();
  const bool is_vector = vec != nullptr && table.translate == vec->translate;
  CHECK((is_scalar || is_vector));
  if (const char* forced = std::getenv("DEMDESC_KERNELS")) {
    if (std::string(forced) == "scalar") CHECK(is_scalar);
  }
}

}  // TEST_SUITE
