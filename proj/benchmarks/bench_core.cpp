#include <benchmark/benchmark.h>

#include "wittcv/autgrp.hpp"
#include "wittcv/varieties.hpp"
#include "wittcv/witt.hpp"

using namespace wittcv;

namespace {

witt::WittElement random_element(const ffield::FieldCtx& f, autgrp::Rng& rng, int first = -1) {
  auto x = witt::zero(f);
  for (int d = first; d <= static_cast<int>(f.p()) - 2; ++d) x.coeff(d) = autgrp::random_element(f, rng);
  return x;
}

ffield::FieldCtx field(const benchmark::State& state) {
  return ffield::FieldCtx::make(state.range(0), static_cast<int>(state.range(1)));
}

void BM_FieldMul(benchmark::State& state) {
  const auto f = field(state);
  autgrp::Rng rng(1);
  std::vector<ffield::Elem> xs(256);
  for (auto& x : xs) x = autgrp::random_element(f, rng);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.mul(xs[k & 255], xs[(k + 1) & 255]));
    ++k;
  }
}
BENCHMARK(BM_FieldMul)->Args({13, 1})->Args({5, 2})->Args({13, 3});

void BM_Bracket(benchmark::State& state) {
  const auto f = field(state);
  const witt::WittAlgebra alg(f);
  autgrp::Rng rng(2);
  const auto x = random_element(f, rng), y = random_element(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(alg.bracket(x, y));
}
BENCHMARK(BM_Bracket)->Args({7, 1})->Args({13, 1})->Args({5, 2});

void BM_Centralizer(benchmark::State& state) {
  const auto f = field(state);
  const witt::WittAlgebra alg(f);
  autgrp::Rng rng(3);
  const auto x = random_element(f, rng, 1);
  for (auto _ : state) benchmark::DoNotOptimize(alg.centralizer(x));
}
BENCHMARK(BM_Centralizer)->Args({7, 1})->Args({13, 1});

void BM_IsNilpotent(benchmark::State& state) {
  const auto f = field(state);
  autgrp::Rng rng(4);
  const auto x = random_element(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(witt::is_nilpotent(x));
}
BENCHMARK(BM_IsNilpotent)->Args({7, 1})->Args({13, 1});

void BM_Rectify(benchmark::State& state) {
  const auto f = field(state);
  autgrp::Rng rng(5);
  const auto x = autgrp::aut_apply(autgrp::aut_random(f, rng), witt::basis(f, -1));
  for (auto _ : state) benchmark::DoNotOptimize(autgrp::rectify(x));
}
BENCHMARK(BM_Rectify)->Args({7, 1})->Args({13, 1});

void BM_CertMembership(benchmark::State& state) {
  const auto f = field(state);
  const witt::WittAlgebra alg(f);
  autgrp::Rng rng(6);
  const auto pair = varieties::random_certified_pair(alg, 1, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(varieties::covering_index(varieties::PairSpace::Full, pair.x, pair.y));
  }
}
BENCHMARK(BM_CertMembership)->Args({7, 1})->Args({13, 1});

}  // namespace

BENCHMARK_MAIN();
