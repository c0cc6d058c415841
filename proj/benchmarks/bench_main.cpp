#include <benchmark/benchmark.h>

#include <memory>

#include "sumset/adversary.hpp"
#include "sumset/cantor.hpp"
#include "sumset/extraction.hpp"
#include "sumset/world_gen.hpp"

namespace {

using namespace sumset;

void BM_EnumerateTypes(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto depth = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_types(k, depth).size());
}
BENCHMARK(BM_EnumerateTypes)->Args({3, 4})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  WorldGenOptions o;
  o.teeth = r;
  o.size = std::size_t{256} << (r - 1);
  o.depth = 256 * r;
  auto world = std::make_shared<const EmbeddedWorld>(generate_world(o));
  WorldColourings wc{r, static_cast<Colour>(r), world,
                     generate_type_maps(r, static_cast<Colour>(r), 1)};
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(wc, 5).colour);
}
BENCHMARK(BM_Pipeline)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  auto s = AdditiveStructure::interval(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_bad_colouring(s, 2, 2).outcome);
}
BENCHMARK(BM_Search)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VerifyBad(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto s = AdditiveStructure::cyclic(n);
  std::vector<Colour> colouring(n);
  for (std::size_t i = 0; i < n; ++i) colouring[i] = static_cast<Colour>((i * i) % 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bad(s, colouring, 3).bad);
}
BENCHMARK(BM_VerifyBad)->Arg(10)->Arg(20)->Arg(40);

}  // namespace
BENCHMARK_MAIN();
