#include <benchmark/benchmark.h>

#include "folia/foliation.hpp"
#include "folia/matrix.hpp"
#include "folia/newton.hpp"
#include "folia/polynomial.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {

Polynomial dense_polynomial(int n, int degree, Rng& rng) {
  Polynomial p(n);
  MultiIndex e(n, 0);
  while (true) {
    p.add_term(e, Rational(rng.uniform(-99, 99), rng.uniform(1, 7)));
    int k = n - 1;
    while (k >= 0 && e[k] == degree) --k;
    if (k < 0) break;
    ++e[k];
    for (int j = k + 1; j < n; ++j) e[j] = 0;
  }
  return p;
}

RationalMatrix cycle_matrix(int n) {
  RationalMatrix a(n);
  for (int i = 0; i < n; ++i) a.at(i, (i + 1) % n) = i + 1;
  return a;
}

MonomialIdeal cycle_ideal(int n) {
  std::vector<MultiIndex> gens;
  for (int i = 0; i < n; ++i) {
    MultiIndex e(n, 1);
    e[i] = 0;
    e[(i + 1) % n] = 2;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

void BM_PolynomialMultiply(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const Polynomial a = dense_polynomial(n, 3, rng);
  const Polynomial b = dense_polynomial(n, 3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolynomialMultiply)->Arg(2)->Arg(3);

void BM_CharacteristicPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  RationalMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = rng.uniform(-9, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(characteristic_polynomial(a));
  }
}
BENCHMARK(BM_CharacteristicPolynomial)->Arg(4)->Arg(6)->Arg(8);

void BM_LctCycleIdeal(benchmark::State& state) {
  const MonomialIdeal ideal = cycle_ideal(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lct_monomial(ideal));
  }
}
BENCHMARK(BM_LctCycleIdeal)->Arg(3)->Arg(5)->Arg(7);

void BM_NewtonMembership(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonomialIdeal ideal = cycle_ideal(n);
  const std::vector<Rational> ones(n, Rational(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_membership(ones, ideal));
  }
}
BENCHMARK(BM_NewtonMembership)->Arg(3)->Arg(6);

void BM_SelectLambda(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RationalMatrix a = cycle_matrix(n);
  IndexSet boundary(n);
  for (int i = 0; i < n; ++i) boundary[i] = i;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_lambda(a, boundary, seed++));
  }
}
BENCHMARK(BM_SelectLambda)->Arg(3)->Arg(4)->Arg(5);

void BM_GammaConstruct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RationalMatrix a = cycle_matrix(n);
  std::vector<Polynomial> comps;
  for (int i = 0; i < n; ++i) {
    MultiIndex square(n, 0);
    square[i] = 2;
    comps.push_back(a.row_linear_form(i) + Polynomial::monomial(n, square, Rational(1)));
  }
  const VectorField v(n, std::move(comps));
  IndexSet boundary(n);
  for (int i = 0; i < n; ++i) boundary[i] = i;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_construct(v, boundary, std::nullopt, seed++));
  }
}
BENCHMARK(BM_GammaConstruct)->Arg(3)->Arg(4);

void BM_TangencyDeterminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  std::vector<Polynomial> comps;
  for (int i = 0; i < n; ++i) comps.push_back(dense_polynomial(n, 2, rng));
  const VectorField v(n, std::move(comps));
  LambdaVector lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = rng.uniform(1, 100);
  IndexSet boundary(n);
  for (int i = 0; i < n; ++i) boundary[i] = i;
  const auto fields = log_annihilator_fields(n, lambda, boundary, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tangency_determinant(v, fields));
  }
}
BENCHMARK(BM_TangencyDeterminant)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
