#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "anyons/curves.hpp"
#include "anyons/moves.hpp"

using namespace anyons;

namespace {

StandardSurface tau_surface(int n) {
  const AnyonModel& m = AnyonModel::builtin("fibonacci");
  return {std::vector<Label>(n, 1), m.vacuum()};
}

TreeShape right_comb(int n) {
  std::string text = std::to_string(n);
  for (int i = n - 1; i >= 1; --i)
    text = "(" + std::to_string(i) + " " + text + ")";
  return TreeShape::parse(text);
}

FramedBraidWord pseudo_word(int n, int len, unsigned seed) {
  std::mt19937 rng(seed);
  FramedBraidWord w;
  w.num_strands = n;
  for (int i = 0; i < len; ++i) {
    BraidGen g;
    g.kind = rng() % 4 ? BraidGen::Kind::Sigma : BraidGen::Kind::Twist;
    g.index = static_cast<int>(
        rng() % static_cast<unsigned>(g.kind == BraidGen::Kind::Sigma ? n - 1
                                                                      : n));
    g.power = (rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 2));
    w.append(g);
  }
  return w;
}

void BM_dim(benchmark::State& state) {
  const AnyonModel& m = AnyonModel::builtin("fibonacci");
  StandardSurface s = tau_surface(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dim(m, s));
}
BENCHMARK(BM_dim)->Arg(6)->Arg(10)->Arg(14);

void BM_enumerate_basis(benchmark::State& state) {
  const AnyonModel& m = AnyonModel::builtin("fibonacci");
  int n = static_cast<int>(state.range(0));
  StandardSurface s = tau_surface(n);
  TreeShape shape = TreeShape::left_comb(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_basis(m, s, shape));
}
BENCHMARK(BM_enumerate_basis)->Arg(6)->Arg(10)->Arg(14);

void BM_f_matrix(benchmark::State& state) {
  const AnyonModel& m = AnyonModel::builtin("fibonacci");
  for (auto _ : state) benchmark::DoNotOptimize(f_matrix(m, 1, 1, 1, 1));
}
BENCHMARK(BM_f_matrix);

void BM_route(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TreeShape from = TreeShape::left_comb(n);
  TreeShape to = right_comb(n);
  for (auto _ : state) benchmark::DoNotOptimize(route(from, to));
}
BENCHMARK(BM_route)->Arg(6)->Arg(10)->Arg(14);

void BM_compile(benchmark::State& state) {
  const AnyonModel& m = AnyonModel::builtin("fibonacci");
  int n = static_cast<int>(state.range(0));
  StandardSurface s = tau_surface(n);
  FramedBraidWord w = pseudo_word(n, 16, 7);
  for (auto _ : state) benchmark::DoNotOptimize(compile(m, s, w));
}
BENCHMARK(BM_compile)->Arg(4)->Arg(6)->Arg(8);

// The strand-image words of the normal form can grow exponentially with
// word length (the price of a faithful invariant), so the range stays short.
void BM_normal_form(benchmark::State& state) {
  FramedBraidWord w = pseudo_word(6, static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(w));
}
BENCHMARK(BM_normal_form)->Arg(16)->Arg(32)->Arg(64);

void BM_refactor(benchmark::State& state) {
  const AnyonModel& m = AnyonModel::builtin("fibonacci");
  int n = 5;
  CurveDiagram from, to;
  from.surface = tau_surface(n);
  from.word = pseudo_word(n, 12, 13);
  to.surface = from.surface;
  to.word = pseudo_word(n, 12, 17);
  // Align the label orderings so the diagrams share a base.
  std::vector<int> at_from = from.word.strand_permutation();
  std::vector<int> at_to = to.word.strand_permutation();
  std::vector<Label> base = from.base_labels();
  for (int slot = 0; slot < n; ++slot)
    to.surface.interior[slot] = base[at_to[slot]];
  for (auto _ : state) benchmark::DoNotOptimize(refactor(m, from, to));
}
BENCHMARK(BM_refactor);

}  // namespace

BENCHMARK_MAIN();
