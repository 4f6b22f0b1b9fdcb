#include <benchmark/benchmark.h>

#include "fov/analysis.hpp"
#include "fov/harness.hpp"

using namespace fov;

namespace {

GroupSpec named(const std::string& name) {
  for (auto& s : builtin_corpus(720))
    if (s.name == name) return s;
  throw std::invalid_argument(name);
}

const std::vector<std::string> kGroups = {"S4", "Q32", "C105", "A5", "S5", "Q8xQ8", "A6", "S6"};

void args(benchmark::internal::Benchmark* b) {
  for (std::size_t i = 0; i < kGroups.size(); ++i) b->Arg(static_cast<int>(i));
}

void BM_Closure(benchmark::State& state) {
  const GroupSpec spec = named(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(spec.build());
  state.SetLabel(spec.name);
}
BENCHMARK(BM_Closure)->Apply(args)->Unit(benchmark::kMillisecond);

void BM_Classes(benchmark::State& state) {
  const GroupSpec spec = named(kGroups[state.range(0)]);
  const PermGroup g = spec.build();
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(g));
  state.SetLabel(spec.name);
}
BENCHMARK(BM_Classes)->Apply(args)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const GroupSpec spec = named(kGroups[state.range(0)]);
  const PermGroup g = spec.build();
  const ClassData c = conjugacy_classes(g);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g, c));
  state.SetLabel(spec.name);
}
BENCHMARK(BM_CharacterTable)->Apply(args)->Unit(benchmark::kMillisecond);

void BM_Orthogonality(benchmark::State& state) {
  const GroupSpec spec = named(kGroups[state.range(0)]);
  const PermGroup g = spec.build();
  const ClassData c = conjugacy_classes(g);
  const CharacterTable t = character_table(g, c);
  for (auto _ : state) benchmark::DoNotOptimize(verify_orthogonality(t, c));
  state.SetLabel(spec.name);
}
BENCHMARK(BM_Orthogonality)->Apply(args)->Unit(benchmark::kMillisecond);

void BM_Analysis(benchmark::State& state) {
  const GroupSpec spec = named(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(GroupAnalysis(spec));
  state.SetLabel(spec.name);
}
BENCHMARK(BM_Analysis)->Apply(args)->Unit(benchmark::kMillisecond);

void BM_GaloisApply(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  Cyclotomic x(n);
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); k += 3) x += Cyclotomic::root_of_unity(n, k * k);
  std::int64_t r = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(galois_apply(x, r));
    do r = (r + 2) % static_cast<std::int64_t>(n); while (gcd(static_cast<std::uint64_t>(r), n) != 1);
  }
}
BENCHMARK(BM_GaloisApply)->Arg(24)->Arg(105)->Arg(128);

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  Cyclotomic x(n), y(n);
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n) / 3; ++k) {
    x += Cyclotomic::root_of_unity(n, k);
    y -= Cyclotomic::root_of_unity(n, k * k + 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply)->Arg(24)->Arg(105)->Arg(128);

void BM_Canonicalize(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const ResidueSet h = generate_unit_subgroup(n, {n - 1});
  for (auto _ : state) benchmark::DoNotOptimize(field_key_canonicalize(n, h));
}
BENCHMARK(BM_Canonicalize)->Arg(60)->Arg(840)->Arg(5040);

void BM_CorpusRun(benchmark::State& state) {
  const auto corpus = builtin_corpus(static_cast<std::uint64_t>(state.range(0)));
  HarnessOptions options;
  options.suites = suite_ids();
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(corpus, options));
  state.counters["groups"] = static_cast<double>(corpus.size());
}
BENCHMARK(BM_CorpusRun)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
