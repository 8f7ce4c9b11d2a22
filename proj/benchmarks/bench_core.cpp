#include <benchmark/benchmark.h>

#include <memory>

#include "bicanon/beauville.hpp"
#include "bicanon/exact_linalg.hpp"
#include "bicanon/fermat.hpp"
#include "bicanon/linsys.hpp"
#include "bicanon/piclattice.hpp"

using namespace bicanon;

namespace {

// Degree-d system with the multiplicities of 2K+D for the K^2=7 example, scaled.
void BM_H0FatPoints(benchmark::State& state) {
  const auto cfg = linsys::quadrilateral_config();
  const auto d = state.range(0);
  const std::int64_t m = d / 3;
  const linsys::FatPointSystem sys{d, {m, m + 1, m, m + 1, m + 1, m + 1}};
  for (auto _ : state) benchmark::DoNotOptimize(linsys::h0_fat_points(cfg, sys));
  state.counters["monomials"] = static_cast<double>(linsys::monomial_count(d));
}
BENCHMARK(BM_H0FatPoints)->DenseRange(3, 12, 3)->Unit(benchmark::kMicrosecond);

void BM_BareissRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  exact::Matrix m(n, exact::Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>((i * 7 + j * 13 + i * j) % 23) - 11;
  for (auto _ : state) benchmark::DoNotOptimize(exact::rank(m));
}
BENCHMARK(BM_BareissRank)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

covers::BranchDataP1 curve(const grouplib::AbelianGroup& G, const std::vector<std::vector<std::int64_t>>& elems) {
  covers::BranchDataP1 d{G, {}, {}};
  for (std::size_t i = 0; i < elems.size(); ++i) d.entries.push_back({G.element(elems[i]), 1, {"p" + std::to_string(i)}});
  return d;
}

void BM_BicanonicalReportZ24(benchmark::State& state) {
  const grouplib::AbelianGroup G({2, 2, 2, 2});
  const std::vector<std::vector<std::int64_t>> elems{{1, 1, 1, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const beauville::ProductQuotientSpec spec{
      grouplib::Automorphism(G, {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {1, 0, 1, 1}}), curve(G, elems), curve(G, elems),
      {}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(beauville::bicanonical_report(spec));
}
BENCHMARK(BM_BicanonicalReportZ24)->Unit(benchmark::kMicrosecond);

void BM_FermatReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fermat::fermat_report());
}
BENCHMARK(BM_FermatReport)->Unit(benchmark::kMillisecond);

void BM_CommonKernel(benchmark::State& state) {
  const grouplib::AbelianGroup G(std::vector<std::int64_t>(static_cast<std::size_t>(state.range(0)), 2));
  const auto chars = G.characters();
  const std::vector<grouplib::Character> some(chars.begin() + 1, chars.begin() + 4);
  for (auto _ : state) benchmark::DoNotOptimize(grouplib::common_kernel(G, some));
}
BENCHMARK(BM_CommonKernel)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
