#include <benchmark/benchmark.h>

#include <random>

#include "braidforge/abelianize.hpp"
#include "braidforge/aut_action.hpp"
#include "braidforge/catalog.hpp"
#include "braidforge/quotient.hpp"
#include "braidforge/rewriting.hpp"
#include "braidforge/tietze.hpp"

using namespace braidforge;

namespace {

std::vector<Syllable> random_syllables(std::size_t count) {
  std::mt19937 rng(7);
  std::vector<Symbol> ab{Symbol::intern("a"), Symbol::intern("b"),
                         Symbol::intern("c"), Symbol::intern("d")};
  std::vector<Syllable> raw;
  raw.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    raw.push_back({ab[rng() % ab.size()],
                   static_cast<std::int64_t>(rng() % 7) - 3});
  return raw;
}

void BM_FreeReduce(benchmark::State& state) {
  auto raw = random_syllables(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Word::from_syllables(raw));
}
BENCHMARK(BM_FreeReduce)->Arg(64)->Arg(1024);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(11);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = static_cast<std::int64_t>(rng() % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(24);

void BM_DeriveFlat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p = catalog({Family::FlatWeldedBraid, n});
  for (auto _ : state) {
    QuotientMap q = flat_abelianization_quotient(p);
    auto [table, t] = coset_table(q);
    (void)table;
    benchmark::DoNotOptimize(derived_presentation(q, t));
  }
}
BENCHMARK(BM_DeriveFlat)->Arg(3)->Arg(6);

void BM_DeriveWindowedWelded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p = catalog({Family::WeldedBraid, n});
  for (auto _ : state) {
    QuotientMap q = welded_abelianization_quotient(p);
    benchmark::DoNotOptimize(
        derived_presentation(q, graded_transversal(q, 3)));
  }
}
BENCHMARK(BM_DeriveWindowedWelded)->Arg(4)->Arg(6);

void BM_OracleRelators(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p = catalog({Family::WeldedBraid, n});
  for (auto _ : state) {
    bool all = true;
    for (const Word& r : p.relators()) all &= is_identity_in_wb(r, n);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_OracleRelators)->Arg(4)->Arg(6);

void BM_ReplayLemma23(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Presentation p = catalog({Family::WeldedBraid, n});
  QuotientMap q = welded_abelianization_quotient(p);
  DerivedPresentation dp =
      derived_presentation(q, graded_transversal(q, 3));
  ParsedScript script =
      parse_script(builtin_scripts().at("lemma-2.3.tz"), "lemma-2.3.tz");
  for (auto _ : state)
    benchmark::DoNotOptimize(replay_script(dp.base, script));
}
BENCHMARK(BM_ReplayLemma23)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
