#include <benchmark/benchmark.h>

#include <random>

#include "mcgrep/genus2.hpp"
#include "mcgrep/lawrence_krammer.hpp"
#include "mcgrep/sphere.hpp"

using namespace mcgrep;

namespace {

Word random_word(Context ctx, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto alphabet = static_cast<std::uint64_t>(2 * ctx.generator_count());
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < length; ++k) {
    const auto r = rng() % alphabet;
    letters.push_back(Letter{static_cast<int>(r / 2) + 1, r % 2 == 0 ? 1 : -1});
  }
  return Word(ctx, letters);
}

void BM_PolyMul(benchmark::State& state) {
  // entries of a moderately long rescaled 5-braid image
  const RingMatrix m = LawrenceKrammer(5, true).evaluate(random_word(Context::braid(5), 30, 1));
  LaurentPoly a, b;
  for (std::size_t i = 0; i < m.dim() * m.dim(); ++i) {
    const auto& p = m(i / m.dim(), i % m.dim());
    if (p.size() > a.size()) {
      b = a;
      a = p;
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.size() + b.size());
}
BENCHMARK(BM_PolyMul);

void BM_LawrenceKrammer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LawrenceKrammer lk(n, true);
  const Word w = random_word(lk.context(), static_cast<std::size_t>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lk.evaluate(w));
}
BENCHMARK(BM_LawrenceKrammer)->Args({4, 20})->Args({6, 20})->Args({6, 50})->Unit(benchmark::kMillisecond);

void BM_SphereEval(benchmark::State& state) {
  const SphereRep k(6);
  const Word w = random_word(k.context(), static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(k.evaluate(w));
}
BENCHMARK(BM_SphereEval)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Genus2Eval(benchmark::State& state) {
  const Genus2Rep rho;
  const Word w = random_word(rho.context(), static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(rho.evaluate(w));
}
BENCHMARK(BM_Genus2Eval)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Genus2Construct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Genus2Rep());
}
BENCHMARK(BM_Genus2Construct)->Unit(benchmark::kMillisecond);

void BM_Inverse(benchmark::State& state) {
  const SphereRep k(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(k.generator(1)));
}
BENCHMARK(BM_Inverse)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
