// Copyright 2026 The covch Authors
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

#include <string>
#include <utility>
#include <vector>

#include "covch/commutant.hpp"
#include "covch/spectral.hpp"

namespace {

const std::vector<std::pair<std::string, std::string>> kCases = {
    {"s3", "(2,1)"}, {"q8", "t4"}, {"s4", "(2,2)"}, {"s4", "(3,1)"}};

void BM_BuiltinCatalog(benchmark::State& state) {
  const std::string& group = kCases[static_cast<std::size_t>(state.range(0))].first;
  for (auto _ : state) benchmark::DoNotOptimize(covch::builtin_catalog(group));
  state.SetLabel(group);
}
BENCHMARK(BM_BuiltinCatalog)->DenseRange(0, 3);

void BM_CommutantBasis(benchmark::State& state) {
  const auto& [group, irrep] = kCases[static_cast<std::size_t>(state.range(0))];
  const covch::IrrepCatalog catalog = covch::builtin_catalog(group);
  const covch::Irrep& u = catalog.at(irrep);
  for (auto _ : state) {
    covch::CommutantBasis basis(catalog, u);
    benchmark::DoNotOptimize(basis.entries().data());
  }
  state.SetLabel(group + " " + irrep);
}
BENCHMARK(BM_CommutantBasis)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_MuMatrix(benchmark::State& state) {
  const auto& [group, irrep] = kCases[static_cast<std::size_t>(state.range(0))];
  const covch::IrrepCatalog catalog = covch::builtin_catalog(group);
  const covch::CommutantBasis basis(catalog, catalog.at(irrep));
  for (auto _ : state) benchmark::DoNotOptimize(covch::mu_matrix(basis));
  state.SetLabel(group + " " + irrep);
}
BENCHMARK(BM_MuMatrix)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_DecomposeS5(benchmark::State& state) {
  const covch::IrrepCatalog catalog = covch::builtin_catalog("s5");
  const covch::Irrep& u = catalog.at("(4,1)");
  for (auto _ : state) benchmark::DoNotOptimize(covch::decompose_adjoint(catalog, u));
}
BENCHMARK(BM_DecomposeS5)->Unit(benchmark::kMicrosecond);

}  // namespace
