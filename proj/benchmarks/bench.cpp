#include <benchmark/benchmark.h>

#include <random>

#include "ospx/cehomology.hpp"
#include "ospx/steinberg.hpp"

using namespace ospx;

namespace {

const char* const kPresets[] = {"ground_field_id:Q", "grassmann_id:Q", "matrix_prp:Q:1", "s_plus_sop:Q:M2"};

void BM_SparseRank(benchmark::State& st) {
  Field F = st.range(1) ? Field::prime(7) : Field::rationals();
  const std::size_t n = st.range(0);
  std::mt19937 g(3);
  std::vector<SparseVec> rows(n);
  for (auto& r : rows)
    for (std::size_t k = 0; k < 6; ++k) r.emplace_back(static_cast<std::uint32_t>(g() % n), F.make(1 + g() % 5));
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    r.erase(std::unique(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
            r.end());
  }
  for (auto _ : st) benchmark::DoNotOptimize(sparse_rank(F, rows));
}
BENCHMARK(BM_SparseRank)->Args({200, 0})->Args({200, 1})->Args({1000, 1});

void BM_BuildOsp(benchmark::State& st) {
  AlgebraPtr R = preset_algebra(kPresets[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(build_osp(2, 2, R).osp.dim());
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_BuildOsp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_StoRelations(benchmark::State& st) {
  AlgebraPtr R = preset_algebra(kPresets[st.range(0)]);
  GeneratorFamily F = osp_family(build_osp(2, 2, R));
  for (auto _ : st) benchmark::DoNotOptimize(verify_sto_relations(F).all_pass());
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_StoRelations)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_StoModel(benchmark::State& st) {
  AlgebraPtr R = preset_algebra(kPresets[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(sto_model(2, 1, R).kernel.size());
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_StoModel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_AlphaCocycle(benchmark::State& st) {
  AlgebraPtr R = preset_algebra(kPresets[st.range(0)]);
  OspAlgebra A = build_osp(2, 1, R);
  TensorQuotient Q = hd1_minus(R).quotient;
  for (auto _ : st) benchmark::DoNotOptimize(verify_cocycle(alpha_gl(A, Q)).all_pass());
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_AlphaCocycle)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

// Full complex against the weight-0 part.
void BM_H2(benchmark::State& st) {
  AlgebraPtr R = preset_algebra(kPresets[st.range(0)]);
  OspAlgebra A = build_osp(2, 1, R);
  std::vector<Vec> torus = st.range(1) ? diagonal_torus(A) : std::vector<Vec>{};
  for (auto _ : st) benchmark::DoNotOptimize(h2_dimension(A.osp.algebra(), torus));
  st.SetLabel(std::string(kPresets[st.range(0)]) + (st.range(1) ? " weight 0" : " full"));
}
BENCHMARK(BM_H2)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_H2Largest(benchmark::State& st) {
  AlgebraPtr R = preset_algebra("s_plus_sop:Q:M2");
  for (auto _ : st) benchmark::DoNotOptimize(h2_compare(2, 2, R).oracle);
}
BENCHMARK(BM_H2Largest)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_HomologyFunctors(benchmark::State& st) {
  AlgebraPtr R = preset_algebra(kPresets[st.range(0)]);
  for (auto _ : st) {
    benchmark::DoNotOptimize(hd1_minus(R).homology.dim);
    benchmark::DoNotOptimize(hd1_tilde(R).homology.dim);
    benchmark::DoNotOptimize(i3_and_z(R).z_dim());
  }
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_HomologyFunctors)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
