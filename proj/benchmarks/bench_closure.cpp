#include <benchmark/benchmark.h>

#include "twoclose/builders.hpp"
#include "twoclose/closure.hpp"
#include "twoclose/embedding.hpp"
#include "twoclose/harness.hpp"
#include "twoclose/structure.hpp"

using namespace twoclose;

namespace {

closure_options with_method(closure_method m) {
    closure_options opts;
    opts.method = m;
    return opts;
}

void BM_EnumerateElements(benchmark::State& state) {
    const std::string spec = "dihedral:" + std::to_string(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_group_spec(spec).order());
    }
}
BENCHMARK(BM_EnumerateElements)->Arg(16)->Arg(32)->Arg(48);

void BM_Orbitals(benchmark::State& state) {
    const perm_group g = lemma24_action({2, state.range(0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbitals(g).color_count);
    }
}
BENCHMARK(BM_Orbitals)->Arg(4)->Arg(10);

void BM_ClosureBrute(benchmark::State& state) {
    const perm_group g = lemma24_action({2, state.range(0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            closure2_bruteforce(g, with_method(closure_method::brute_force)).order());
    }
}
BENCHMARK(BM_ClosureBrute)->Arg(2)->Arg(4);

void BM_ClosureBacktrack(benchmark::State& state) {
    const perm_group g = lemma24_action({2, state.range(0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            closure2_backtrack(g, with_method(closure_method::backtrack)).order());
    }
}
BENCHMARK(BM_ClosureBacktrack)->Arg(2)->Arg(4)->Arg(10);

void BM_ClosureBacktrackRegularQ8(benchmark::State& state) {
    const perm_group q8 = parse_group_spec("quaternion:8");
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure2_backtrack(q8).order());
    }
}
BENCHMARK(BM_ClosureBacktrackRegularQ8);

void BM_SubgroupLattice(benchmark::State& state) {
    const perm_group g = parse_group_spec(state.range(0) == 0 ? "quaternion:8" : "dihedral:16");
    for (auto _ : state) {
        benchmark::DoNotOptimize(subgroup_lattice(g).subgroups().size());
    }
}
BENCHMARK(BM_SubgroupLattice)->Arg(0)->Arg(1);

void BM_FaithfulActions(benchmark::State& state) {
    const subgroup_lattice lattice(parse_group_spec("quaternion:8"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(faithful_actions(lattice, 12).size());
    }
}
BENCHMARK(BM_FaithfulActions);

void BM_Tc2Sweep(benchmark::State& state) {
    const perm_group g = parse_group_spec("cyclic:6");
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_tc2_bounded(g, "C6", 10).status);
    }
}
BENCHMARK(BM_Tc2Sweep);

void BM_UniversalAction(benchmark::State& state) {
    const perm_group d8 = parse_group_spec("dihedral:8");
    const permutation a = d8.generators()[0];
    const permutation b = d8.generators()[1];
    const perm_group delta = parse_group_spec("lemma24:2,2");
    for (auto _ : state) {
        const embedding_context ctx = make_context(d8, {b, compose(a, a)}, delta);
        benchmark::DoNotOptimize(universal_action(ctx).order());
    }
}
BENCHMARK(BM_UniversalAction);

} // namespace

BENCHMARK_MAIN();
