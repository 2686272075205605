#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "sheafstab/bundle.hpp"
#include "sheafstab/pairing.hpp"
#include "sheafstab/report.hpp"
#include "sheafstab/scene.hpp"
#include "sheafstab/stability.hpp"
#include "sheafstab/unipoly.hpp"
#include "sheafstab/variety.hpp"

namespace {

using namespace sheafstab;

void BM_UniPolyMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < n; ++i)
    coeffs.emplace_back(static_cast<long long>(3 * i + 1),
                        static_cast<long long>(2 * i + 5));
  const UniPoly p{std::vector<Rational>(coeffs)};
  for (auto _ : state) {
    UniPoly q = p * p;
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_UniPolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_HilbertPolynomial(benchmark::State& state) {
  const auto x = PolarizedVariety::k3(2);
  const auto tx = VirtualBundle::tangent_bundle(x);
  for (auto _ : state) {
    UniPoly p = hilbert_polynomial(tx);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_HilbertPolynomial);

void BM_WeightedFiltration(benchmark::State& state) {
  const Scene s = builtin_paper_scene(2);
  const WeightedFiltration wf{s.build_filtration(s.filtration("hn")),
                              *s.filtration("hn").weights};
  for (auto _ : state) {
    UniPoly p = weighted_filtration_pairing(wf);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_WeightedFiltration);

void BM_ParabolicClosure(benchmark::State& state) {
  const Scene s = builtin_paper_scene(2);
  const ScenePairing& pd = s.pairing("orthogonal");
  const SumObject o = s.build_object(pd);
  const PairingStructure p = s.build_pairing(pd, o);
  const std::vector<AdmissibleSub> steps{{{0, 1}}, {{2, 1}}, {{2, 2}}};
  for (auto _ : state) {
    ParabolicVerdict v = filtration_matches_parabolic(steps, p, o);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ParabolicClosure);

void BM_PaperScene(benchmark::State& state) {
  const Scene s = builtin_paper_scene(2);
  for (auto _ : state) {
    Report r = run_checks(s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PaperScene);

}  // namespace

BENCHMARK_MAIN();
