#include <benchmark/benchmark.h>

#include <string>

#include "semired/dfa.hpp"
#include "semired/reducibility.hpp"
#include "semired/syntactic.hpp"
#include "semired/term.hpp"
#include "semired/verify.hpp"
#include "semired/words.hpp"

using namespace semired;

static void BM_CompileMinDfa(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compile_min_dfa(kCompletelyRegularLanguage, "ab"));
}
BENCHMARK(BM_CompileMinDfa)->Unit(benchmark::kMicrosecond);

static void BM_SyntacticSemigroup(benchmark::State& state) {
  const std::string regex(state.range(0) == 0 ? kComLanguage : kCompletelyRegularLanguage);
  for (auto _ : state) benchmark::DoNotOptimize(syntactic_semigroup(regex, "ab"));
}
BENCHMARK(BM_SyntacticSemigroup)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_OrderedSyntacticMonoid(benchmark::State& state) {
  const SyntacticPresentation sp = syntactic_semigroup(kCompletelyRegularLanguage, "ab");
  for (auto _ : state) benchmark::DoNotOptimize(ordered_syntactic_monoid(sp));
}
BENCHMARK(BM_OrderedSyntacticMonoid)->Unit(benchmark::kMicrosecond);

static void BM_JplusWordSolution(benchmark::State& state) {
  const SyntacticPresentation sp = syntactic_semigroup("(a|b)* a (a|b)* b (a|b)* a (a|b)*", "ab");
  const FiniteSemigroup m = ordered_syntactic_monoid(sp);
  const GeneratorMap g{{'x', sp.classof("a")}, {'y', sp.classof("b")}};
  const Term u = parse_term("(xy)^w x");
  const Term v = parse_term("(xyy)^w yx");
  const SolutionTriple triple{m, eval_term(m, g, u), eval_term(m, g, v), g, SolutionMode::Inequality};
  for (auto _ : state) benchmark::DoNotOptimize(jplus_word_solution(triple, u, v));
}
BENCHMARK(BM_JplusWordSolution)->Unit(benchmark::kMicrosecond);

static void BM_BoundedSearch(benchmark::State& state) {
  const SyntacticPresentation sp = syntactic_semigroup(kComLanguage, "ab");
  const SolutionTriple triple{sp.semigroup(), sp.classof("babb"), sp.classof("aaba"),
                              GeneratorMap{{'x', sp.classof("a")}, {'y', sp.classof("b")}}, SolutionMode::Equality};
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounded_omega_solution_search(triple, VarietyKind::Com, size));
}
BENCHMARK(BM_BoundedSearch)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_CubeFree(benchmark::State& state) {
  const Word w = ptm_iterate(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_cube_free(w));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_CubeFree)->DenseRange(8, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_com_counterexample());
    benchmark::DoNotOptimize(verify_groups_counterexample());
    benchmark::DoNotOptimize(verify_cr_counterexample());
  }
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
