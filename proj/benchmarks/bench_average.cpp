#include <benchmark/benchmark.h>

#include <random>

#include "uavg/average.hpp"
#include "uavg/simplicial.hpp"

namespace {

using namespace uavg;

Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

UniMatrix random_point(const LieSpan& g, std::mt19937& rng) {
  std::vector<Scalar> c;
  for (int k = 0; k < g.dim(); ++k) c.emplace_back(small_rational(rng));
  return exp_nilpotent(g.combine(c));
}

SectionTuple random_points(const LieSpanPtr& g, int q, std::mt19937& rng) {
  std::vector<UniMatrix> pts;
  for (int i = 0; i <= q; ++i) pts.push_back(random_point(*g, rng));
  return SectionTuple(g, pts);
}

LieSpanPtr upper(int n) { return std::make_shared<const LieSpan>(LieSpan::upper_triangular(n)); }

// args: matrix size n, simplex degree q
void BM_Wav(benchmark::State& state) {
  std::mt19937 rng(1);
  const SectionTuple t = random_points(upper(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(wav(t));
}
BENCHMARK(BM_Wav)->Args({3, 1})->Args({3, 3})->Args({4, 2})->Args({4, 3})->Args({5, 2})->Args({5, 4})
    ->Unit(benchmark::kMillisecond);

void BM_WsymPass(benchmark::State& state) {
  std::mt19937 rng(2);
  const SectionTuple t = lift_w(random_points(upper(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(wsym(t));
}
BENCHMARK(BM_WsymPass)->Args({4, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_ExpLog(benchmark::State& state) {
  std::mt19937 rng(3);
  const UniMatrix u = random_point(*upper(static_cast<int>(state.range(0))), rng);
  for (auto _ : state) benchmark::DoNotOptimize(exp_nilpotent(log_unipotent(u)));
}
BENCHMARK(BM_ExpLog)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_Bch(benchmark::State& state) {
  std::mt19937 rng(4);
  const LieSpanPtr g = upper(static_cast<int>(state.range(0)));
  const NilMatrix a = log_unipotent(random_point(*g, rng));
  const NilMatrix b = log_unipotent(random_point(*g, rng));
  for (auto _ : state) benchmark::DoNotOptimize(bch(a, b));
}
BENCHMARK(BM_Bch)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_BuildAndValidateSection(benchmark::State& state) {
  std::mt19937 rng(5);
  const LieSpanPtr g = std::make_shared<const LieSpan>(LieSpan::heisenberg());
  const FiniteCover cover({"p0", "p1", "p2", "p3"}, {{"p0", "p1", "p2"}, {"p1", "p2", "p3"}, {"p2", "p3", "p0"}});
  std::vector<LocalSection> locals;
  for (int j = 0; j < cover.num_opens(); ++j) {
    LocalSection l;
    l.open_index = j;
    for (int p : cover.open(j)) l.values.emplace(cover.points()[static_cast<size_t>(p)], random_point(*g, rng));
    locals.push_back(l);
  }
  const int max_q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const SimplicialSection s = build_simplicial_section(cover, locals, g, max_q);
    benchmark::DoNotOptimize(validate_simplicial_section(s, max_q));
  }
}
BENCHMARK(BM_BuildAndValidateSection)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
