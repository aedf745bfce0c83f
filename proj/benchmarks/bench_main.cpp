// Copyright 2026 The wqdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "wqdist/eig.hpp"
#include "wqdist/error_channel.hpp"
#include "wqdist/graph_state.hpp"
#include "wqdist/metrics.hpp"
#include "wqdist/partition.hpp"
#include "wqdist/sweep.hpp"
#include "wqdist/weighted.hpp"

namespace {

using namespace wqdist;

DenseOperator random_hermitian(int dim, std::mt19937_64& rng) {
    DenseOperator m(dim, true);
    std::normal_distribution<double> normal;
    for (int r = 0; r < dim; ++r) {
        m.at(r, r) = cd{normal(rng), 0.0};
        for (int c = r + 1; c < dim; ++c) {
            const cd v{normal(rng), normal(rng)};
            m.at(r, c) = v;
            m.at(c, r) = std::conj(v);
        }
    }
    return m;
}

DenseOperator random_density(int dim, std::mt19937_64& rng) {
    const DenseOperator g = random_hermitian(dim, rng);
    DenseOperator rho = g * g;
    rho.hermitian = true;
    const double tr = rho.trace().real();
    for (auto& v : rho.a) v /= tr;
    return rho;
}

void BM_ClusterState(benchmark::State& state) {
    const Graph g = line_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cluster_state(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClusterState)->DenseRange(4, 12, 2)->Complexity();

void BM_PartialTrace(benchmark::State& state) {
    const PauliSum rho = cluster_state(line_graph(8));
    const std::vector<int> keep = {1, 3, 5, 7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, keep));
    }
}
BENCHMARK(BM_PartialTrace);

void BM_ToDense(benchmark::State& state) {
    const PauliSum rho = cluster_state(line_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_dense(rho));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ToDense)->DenseRange(4, 8, 2)->Complexity();

void BM_HermitianEig(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const DenseOperator a = random_hermitian(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Fidelity(benchmark::State& state) {
    std::mt19937_64 rng(8);
    const DenseOperator rho = random_density(static_cast<int>(state.range(0)), rng);
    const DenseOperator sigma = random_density(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fidelity(rho, sigma));
    }
}
BENCHMARK(BM_Fidelity)->RangeMultiplier(2)->Range(8, 32);

void BM_BlockTable(benchmark::State& state) {
    const Metric metric = state.range(0) == 0 ? Metric::bures : Metric::hilbert_schmidt;
    const PauliSum rho = cluster_state(line_graph(5));
    const PauliSum sigma = conjugate_by_pauli(rho, PauliString::single(5, 3, 'Z'));
    for (auto _ : state) {
        benchmark::DoNotOptimize(block_distance_table(rho, sigma, metric));
    }
}
BENCHMARK(BM_BlockTable)->Arg(0)->Arg(1);

void BM_WeightedDP(benchmark::State& state) {
    // Synthetic table: isolates the O(3^n) maximization from the metric cost.
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    BlockDistanceTable table;
    table.n = n;
    table.metric = Metric::bures;
    table.by_mask.assign(1u << n, 0.0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) table.by_mask[mask] = uniform(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_from_table(table));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_WeightedDP)->DenseRange(6, 12, 2)->Complexity();

void BM_PartitionEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PartitionGenerator gen(n);
        std::size_t count = 0;
        while (auto p = gen.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_PartitionEnumeration)->DenseRange(6, 10, 2);

void BM_SweepLine4Bures(benchmark::State& state) {
    ExperimentConfig cfg;
    cfg.graph = "line4";
    cfg.metrics = {Metric::bures};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(cfg));
    }
}
BENCHMARK(BM_SweepLine4Bures);

}  // namespace

BENCHMARK_MAIN();
