#include <benchmark/benchmark.h>

#include "torusfill/fillability.hpp"
#include "torusfill/intmat.hpp"
#include "torusfill/mcgwords.hpp"

using namespace torusfill;

namespace {

// X * A * X^-1 for a fixed moderately sized X.
Mat2 conjugated(const Mat2& a) {
  const Mat2 x = pow(mat2::T, 3) * mat2::S * pow(mat2::T, -2) * mat2::S * mat2::T;
  return x * a * x.inverse();
}

void BM_WitnessSearch(benchmark::State& state) {
  const Mat2 a = -eval_a(DSeq{5, 2, 2, 3});
  const Mat2 b = conjugated(a);
  const Int bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_witness_search(a, b, bound));
}
BENCHMARK(BM_WitnessSearch)->Arg(50)->Arg(500)->Arg(5000);

void BM_Decompose(benchmark::State& state) {
  std::vector<Int> d{3};
  for (Int i = 1; i < state.range(0); ++i) d.push_back(i % 2 == 0 ? 4 : 2);
  const Mat2 a = conjugated(-eval_a(DSeq(d)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_negative_hyperbolic(a));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 6, 2);

void BM_BlowupSearch(benchmark::State& state) {
  // rho(n + 3, 2^m) for a single block with n = m + 4: the search runs to length m + 6.
  const Int m = state.range(0);
  std::vector<Int> target{m + 3};
  target.insert(target.end(), static_cast<std::size_t>(m + 4), 2);
  for (auto _ : state) benchmark::DoNotOptimize(blowup_reachable_search(target.size(), DSeq(target)));
}
BENCHMARK(BM_BlowupSearch)->DenseRange(0, 3);

void BM_EmbeddableSufficient(benchmark::State& state) {
  const DSeq d{3, 2, 2, 9};
  for (auto _ : state) benchmark::DoNotOptimize(embeddable_sufficient(d));
}
BENCHMARK(BM_EmbeddableSufficient);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Int>((i * 7 + j * 3) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_PositivityCheck(benchmark::State& state) {
  const TwistWord w = parse_word("(a1^-2 e a1^2) a2 e (a1 a2 a1 e a1^-1 a2^-1 a1^-1)");
  for (auto _ : state) benchmark::DoNotOptimize(is_positive_factorization(w));
}
BENCHMARK(BM_PositivityCheck);

}  // namespace
BENCHMARK_MAIN();
