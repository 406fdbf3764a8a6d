#include <benchmark/benchmark.h>

#include <ubkit/certifiers.hpp>
#include <ubkit/constructions.hpp>
#include <ubkit/linalg.hpp>
#include <ubkit/reciprocal.hpp>
#include <ubkit/rng.hpp>

using namespace ubkit;

namespace {

StateSet random_set(const SystemShape& shape, int members, std::uint64_t seed) {
    RandomStream rng(seed, 0);
    std::vector<PureState> states;
    for (int m = 0; m < members; ++m) {
        states.push_back(random_pure_state(shape, rng));
    }
    return StateSet(shape, std::move(states));
}

void BM_Orthocomplement(benchmark::State& state) {
    const SystemShape shape({static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0))});
    const StateSet set = random_set(shape, shape.total_dim() / 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orthocomplement(set));
    }
}
BENCHMARK(BM_Orthocomplement)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_SchmidtValues(benchmark::State& state) {
    const SystemShape shape({static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0))});
    RandomStream rng(2, 0);
    const PureState s = random_pure_state(shape, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(schmidt_values(s, 0));
    }
}
BENCHMARK(BM_SchmidtValues)->Arg(2)->Arg(4)->Arg(8);

void BM_SeesawSearch(benchmark::State& state) {
    const SystemShape shape({2, 2});
    const StateSet set = minimal_gupb(shape, default_index_set(shape));
    const SubspaceBasis complement = orthocomplement(set);
    SeesawOptions opts;
    opts.restarts = static_cast<int>(state.range(0));
    opts.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(seesaw_product_search(complement, std::nullopt, opts));
    }
}
BENCHMARK(BM_SeesawSearch)->Arg(4)->Arg(16)->Arg(64);

void BM_CertifyMinimalGupb(benchmark::State& state) {
    const SystemShape shape({2, 2});
    const StateSet set = minimal_gupb(shape, default_index_set(shape));
    SeesawOptions opts;
    opts.restarts = static_cast<int>(state.range(0));
    opts.seed = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_unambiguous_locc(set, opts));
    }
}
BENCHMARK(BM_CertifyMinimalGupb)->Arg(8)->Arg(32);

void BM_ReciprocalBasis(benchmark::State& state) {
    const SystemShape shape({static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0))});
    RandomStream rng(5, 0);
    StateSet basis = [&] {
        while (true) {
            StateSet candidate = random_set(shape, shape.total_dim(), rng.next_u64());
            if (numeric_rank(candidate) == shape.total_dim()) return candidate;
        }
    }();
    for (auto _ : state) {
        benchmark::DoNotOptimize(reciprocal_basis(basis));
    }
}
BENCHMARK(BM_ReciprocalBasis)->Arg(2)->Arg(3)->Arg(4);

void BM_BruteForceGrid(benchmark::State& state) {
    const SystemShape shape({2, 2});
    const StateSet set = random_set(shape, 3, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_product_search(set,
                                                            static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_BruteForceGrid)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
