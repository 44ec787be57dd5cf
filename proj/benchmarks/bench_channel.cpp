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

#include "covch/channel.hpp"

namespace {

const std::vector<std::pair<std::string, std::string>> kCases = {
    {"s3", "(2,1)"}, {"q8", "t4"}, {"s4", "(3,1)"}};

covch::EigenvalueVector scaled(const covch::ChannelSpace& space, double x) {
  covch::EigenvalueVector l;
  l.labels = space.theta().members;
  l.values = covch::RealVector::Constant(
      static_cast<Eigen::Index>(l.labels.size()), x);
  l.values(0) = 1.0;
  return l;
}

void BM_BuildChannel(benchmark::State& state) {
  const auto& [group, irrep] = kCases[static_cast<std::size_t>(state.range(0))];
  const auto space = covch::ChannelSpace::create(covch::builtin_catalog(group), irrep);
  const covch::EigenvalueVector l = scaled(*space, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(covch::build_channel(space, l));
  state.SetLabel(group + " " + irrep);
}
BENCHMARK(BM_BuildChannel)->DenseRange(0, 2);

void BM_ChoiImage(benchmark::State& state) {
  const auto& [group, irrep] = kCases[static_cast<std::size_t>(state.range(0))];
  const auto space = covch::ChannelSpace::create(covch::builtin_catalog(group), irrep);
  const covch::EigenvalueVector l = scaled(*space, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(covch::choi_image(space->basis(), l));
  state.SetLabel(group + " " + irrep);
}
BENCHMARK(BM_ChoiImage)->DenseRange(0, 2);

void BM_BruteForceChoi(benchmark::State& state) {
  const auto& [group, irrep] = kCases[static_cast<std::size_t>(state.range(0))];
  const auto space = covch::ChannelSpace::create(covch::builtin_catalog(group), irrep);
  const covch::EigenvalueVector l = scaled(*space, 0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        covch::brute_force_choi(space->catalog(), space->irrep(), l));
  state.SetLabel(group + " " + irrep);
}
BENCHMARK(BM_BruteForceChoi)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  const auto& [group, irrep] = kCases[static_cast<std::size_t>(state.range(0))];
  const auto space = covch::ChannelSpace::create(covch::builtin_catalog(group), irrep);
  const covch::CovariantChannel ch = covch::build_channel(space, scaled(*space, 0.2));
  for (auto _ : state)
    benchmark::DoNotOptimize(covch::classify_entanglement_breaking(ch));
  state.SetLabel(group + " " + irrep);
}
BENCHMARK(BM_Classify)->DenseRange(0, 2);

// One grid point of the feasibility sweep: eigenvalues to epsilons.
void BM_EpsilonFromL(benchmark::State& state) {
  const auto space = covch::ChannelSpace::create(covch::builtin_catalog("q8"), "t4");
  const covch::EigenvalueVector l = scaled(*space, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(covch::epsilon_from_L(space->mu(), l));
}
BENCHMARK(BM_EpsilonFromL);

}  // namespace
