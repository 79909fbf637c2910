// Copyright 2026 The darboux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "darboux/dynamics.hpp"
#include "darboux/field.hpp"
#include "darboux/linalg.hpp"
#include "darboux/search.hpp"

namespace {

using darboux::Field;
using darboux::FieldSign;
using darboux::ParamPoly;
using darboux::Poly;
using darboux::Rat;

Poly random_poly(std::mt19937& rng, int degree, int terms) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    int ex = static_cast<int>(rng() % (degree + 1));
    int ey = static_cast<int>(rng() % (degree + 1 - ex));
    int ez = static_cast<int>(rng() % (degree + 1 - ex - ey));
    long c = static_cast<long>(rng() % 19) - 9;
    p += Rat(c) * Poly::term(ParamPoly(Rat(1)), darboux::Monomial{ex, ey, ez});
  }
  return p;
}

Field generic_field() {
  return darboux::specialize(darboux::d2_field(FieldSign::negative),
                             {{'a', Rat(2, 3)}, {'b', Rat(-5, 7)}});
}

void BM_PolyMul(benchmark::State& state) {
  std::mt19937 rng(42);
  int degree = static_cast<int>(state.range(0));
  Poly p = random_poly(rng, degree, 20);
  Poly q = random_poly(rng, degree, 20);
  for (auto _ : state) {
    Poly r = p * q;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PolyMul)->Arg(3)->Arg(6);

void BM_LieDerivative(benchmark::State& state) {
  std::mt19937 rng(43);
  Field f = generic_field();
  Poly p = random_poly(rng, static_cast<int>(state.range(0)), 30);
  for (auto _ : state) {
    Poly r = darboux::lie_derivative(f, p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_LieDerivative)->Arg(4)->Arg(8);

void BM_CascadeSolve(benchmark::State& state) {
  Field f = darboux::specialize(darboux::d2_field(FieldSign::negative),
                                {{'a', Rat(1)}, {'b', Rat(-2)}});
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sols = darboux::cascade_solve(f, d, Rat(2));
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_CascadeSolve)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_FindDarboux(benchmark::State& state) {
  Field f = darboux::d2_field(FieldSign::negative);
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto results =
        darboux::find_darboux(f, bound, {{'a', Rat(2, 3)}, {'b', Rat(-5, 7)}});
    benchmark::DoNotOptimize(results);
  }
}
BENCHMARK(BM_FindDarboux)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Nullspace(benchmark::State& state) {
  std::mt19937 rng(44);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  darboux::RatMatrix m(n, darboux::RatRow(n, Rat(0)));
  for (auto& row : m)
    for (auto& e : row)
      e = (rng() % 3 == 0) ? Rat(0)
                           : Rat(static_cast<long>(rng() % 11) - 5,
                                 1 + static_cast<long>(rng() % 4));
  for (auto _ : state) {
    auto basis = darboux::nullspace(m);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_Nullspace)->Arg(10)->Arg(20)->Arg(40);

void BM_Rk4Integrate(benchmark::State& state) {
  Field f = darboux::specialize(darboux::d2_field(FieldSign::negative),
                                {{'a', Rat(1)}, {'b', Rat(-2)}});
  for (auto _ : state) {
    auto traj = darboux::integrate(f, {1.0, 0.0, 1.0}, 5.0, 1e-3);
    benchmark::DoNotOptimize(traj);
  }
}
BENCHMARK(BM_Rk4Integrate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
