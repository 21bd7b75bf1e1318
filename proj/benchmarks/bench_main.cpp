#include <benchmark/benchmark.h>

#include "strongpoly/strongpoly.hpp"

using namespace strongpoly;

namespace {

WeightedGraph family(FamilyKind kind, std::vector<std::int64_t> params) {
    FamilyId f;
    f.kind = kind;
    return generate(f, params);
}

Multigraph cycle(int n) {
    Multigraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Multigraph path(int n) {
    Multigraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace

// cycles into the k-dimensional cube
static void BM_HomHypercube(benchmark::State& state) {
    Multigraph g = cycle(int(state.range(0)));
    WeightedGraph q = family(FamilyKind::Hypercube, {state.range(1)});
    for (auto _ : state) benchmark::DoNotOptimize(hom(g, q));
}
BENCHMARK(BM_HomHypercube)->Args({4, 4})->Args({6, 5})->Args({8, 5});

static void BM_HomCompiledComplete(benchmark::State& state) {
    Multigraph g = cycle(int(state.range(0)));
    CompiledTarget t(family(FamilyKind::Complete, {40}));
    for (auto _ : state) benchmark::DoNotOptimize(hom(g, t));
}
BENCHMARK(BM_HomCompiledComplete)->Arg(5)->Arg(8)->Arg(11);

static void BM_HomByDefinition(benchmark::State& state) {
    Multigraph g = cycle(int(state.range(0)));
    WeightedGraph h = family(FamilyKind::Complete, {4});
    for (auto _ : state) benchmark::DoNotOptimize(hom_by_definition(g, h));
}
BENCHMARK(BM_HomByDefinition)->Arg(4)->Arg(6)->Arg(8);

static void BM_ChromaticPoly(benchmark::State& state) {
    Multigraph g = cycle(int(state.range(0)));
    g.add_edge(0, int(state.range(0)) / 2);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_poly(g));
}
BENCHMARK(BM_ChromaticPoly)->Arg(6)->Arg(9)->Arg(12);

static void BM_FitGrid(benchmark::State& state) {
    std::size_t h = std::size_t(state.range(0));
    int d = int(state.range(1));
    SampleGrid grid;
    grid.points = full_grid(h, d);
    for (const auto& p : grid.points) {
        Rational v = 1;
        for (auto x : p) v *= Rational(x * x - 3 * x + 7);
        grid.values.push_back(v);
    }
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < h; ++i) vars.push_back("x" + std::to_string(i));
    for (auto _ : state) benchmark::DoNotOptimize(fit_grid(grid, d, vars));
}
BENCHMARK(BM_FitGrid)->Args({1, 8})->Args({2, 6})->Args({3, 4});

static void BM_VerifyBipartite(benchmark::State& state) {
    SequenceExpr seq = SequenceExpr::parse("(join (coclique j) (coclique k))");
    Multigraph g = cycle(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_strongly_polynomial(seq, g));
}
BENCHMARK(BM_VerifyBipartite)->Arg(3)->Arg(4);

static void BM_MinBc(benchmark::State& state) {
    WeightedGraph h = path(int(state.range(0))).to_weighted();
    for (auto _ : state) benchmark::DoNotOptimize(min_bc(h).value);
}
BENCHMARK(BM_MinBc)->Arg(4)->Arg(6)->Arg(8);

static void BM_MinBcComplete(benchmark::State& state) {
    WeightedGraph h = family(FamilyKind::Complete, {state.range(0)});
    for (auto _ : state) benchmark::DoNotOptimize(min_bc(h).value);
}
BENCHMARK(BM_MinBcComplete)->Arg(4)->Arg(6);

// tree evaluator against building the composition, at growing multiplicities
static ColouredRootedTree claw_tree(std::int64_t k) {
    return ColouredRootedTree({TreeNode{std::nullopt, {}, "K1", 1}, TreeNode{0, {0}, "F", k}, TreeNode{1, {0, 1}, "F", k}});
}

static void BM_TreeHom(benchmark::State& state) {
    OrnamentTable table{{"K1", WeightedGraph(1)}, {"F", family(FamilyKind::LoopedCoclique, {2})}};
    ColouredRootedTree t = claw_tree(state.range(0));
    Multigraph g = cycle(5);
    for (auto _ : state) benchmark::DoNotOptimize(hom_branched(g, t, table));
}
BENCHMARK(BM_TreeHom)->Arg(2)->Arg(8)->Arg(32);

static void BM_MaterializedHom(benchmark::State& state) {
    OrnamentTable table{{"K1", WeightedGraph(1)}, {"F", family(FamilyKind::LoopedCoclique, {2})}};
    ColouredRootedTree t = claw_tree(state.range(0));
    Multigraph g = cycle(5);
    for (auto _ : state) benchmark::DoNotOptimize(hom(g, branched_composition(t, table)));
}
BENCHMARK(BM_MaterializedHom)->Arg(2)->Arg(8)->Arg(32);

static void BM_Gamma(benchmark::State& state) {
    WeightedGraph h = family(FamilyKind::CompleteMultipartite, {state.range(0), state.range(0)});
    for (auto _ : state) benchmark::DoNotOptimize(gamma(h));
}
BENCHMARK(BM_Gamma)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
