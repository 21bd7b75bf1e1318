#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strongpoly/canonical.hpp"
#include "strongpoly/errors.hpp"
#include "strongpoly/graph.hpp"

using namespace strongpoly;
using namespace fixture;

namespace {

WeightedGraph random_simple(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.set(u, v, 1);
    return b.build();
}

WeightedGraph random_weighted(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> w(-2, 3);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (int x = w(rng)) b.set(u, v, Rational(x, 2));
    return b.build();
}

bool same(const WeightedGraph& a, const WeightedGraph& b) {
    bool iso = is_isomorphic(a, b);
    EXPECT_EQ(iso, oracle::isomorphic(oracle::matrix_of(a), oracle::matrix_of(b)));
    return iso;
}

}  // namespace

TEST(Graph, BuilderAndQueries) {
    GraphBuilder b(3);
    b.set(0, 1, 2).add(0, 1, 1).set(2, 2, Rational(1, 2));
    WeightedGraph g = b.build();
    EXPECT_EQ(g.weight(1, 0), Rational(3));
    EXPECT_EQ(g.loop(2), Rational(1, 2));
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.has_loops());
    EXPECT_FALSE(g.is_simple());
    EXPECT_THROW(GraphBuilder(2).set(0, 2, 1), DomainError);
}

TEST(Graph, MultigraphRoundTrip) {
    Multigraph g(3, {{0, 1}, {0, 1}, {2, 2}});
    WeightedGraph w = g.to_weighted();
    EXPECT_EQ(w.weight(0, 1), Rational(2));
    EXPECT_EQ(w.loop(2), Rational(1));
    EXPECT_EQ(Multigraph::from_weighted(w).m(), 3u);
    EXPECT_THROW(Multigraph::from_weighted(complete(2, Rational(1, 2))), DomainError);
}

TEST(Graph, ComponentsAndRank) {
    Multigraph pk(5, {{0, 1}, {1, 2}, {3, 4}});
    EXPECT_EQ(pk.component_count(), 2);
    EXPECT_EQ(as_multi(complete(3)).rank(), 2);
    EXPECT_EQ(Multigraph(5).component_count(), 5);
    std::vector<int> comp;
    EXPECT_EQ(connected_components(simple(5, {{0, 1}, {1, 2}, {3, 4}}), comp), 2);
    EXPECT_EQ(comp[0], comp[2]);
    EXPECT_NE(comp[0], comp[3]);
}

TEST(Graph, Minor) {
    Multigraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    Multigraph m = c3.minor({true, false, false}, {false, false, false});
    EXPECT_EQ(m.n(), 2);
    EXPECT_EQ(m.m(), 2u);
    Multigraph loop = Multigraph(2, {{0, 1}, {0, 1}}).minor({true, false}, {false, false});
    EXPECT_EQ(loop.n(), 1);
    EXPECT_EQ(loop.loop_count(), 1u);
}

TEST(Complement, Examples) {
    EXPECT_TRUE(same(complement(complete(3)), coclique(3)));
    EXPECT_TRUE(same(complement(complement(path(3))), path(3)));
    // three disjoint edges complement to the octahedron
    WeightedGraph oct = complement(matching(3));
    EXPECT_EQ(oct.edge_count(), 12u);
    GraphBuilder b(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) b.set(u, v, 1);
    EXPECT_TRUE(same(oct, b.build()));
    EXPECT_THROW(complement(complete(2, 1)), DomainError);
}

TEST(Complement, Involution) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        WeightedGraph g = random_simple(rng, 1 + i % 7, 0.4);
        EXPECT_EQ(complement(complement(g)), g);
        WeightedGraph l = affine_reweight(g, 0, 1, 1, 0);  // 0/1 with every loop present
        EXPECT_EQ(looped_complement(looped_complement(l)), l);
    }
}

TEST(LoopedComplement, Examples) {
    EXPECT_TRUE(same(looped_complement(complete(4)), looped_coclique(4)));
    EXPECT_TRUE(same(looped_complement(looped_coclique(3)), complete(3)));
    EXPECT_EQ(looped_complement(looped_complement(cycle(4))), cycle(4));
}

TEST(AffineReweight, Identities) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        WeightedGraph h = random_weighted(rng, 1 + i % 5);
        EXPECT_EQ(affine_reweight(h, 0, 1, 0, 1), h);
        Rational a(1, 2), b(-2), ad(3), bd(1, 3), c(-1), d(2, 5), cd(4), dd(-3);
        WeightedGraph twice = affine_reweight(affine_reweight(h, a, b, ad, bd), c, d, cd, dd);
        EXPECT_EQ(twice, affine_reweight(h, c + d * a, d * b, cd + dd * ad, dd * bd));
    }
    WeightedGraph c4 = cycle(4);
    EXPECT_EQ(affine_reweight(c4, 1, -1, 1, -1), looped_complement(c4));
    EXPECT_EQ(affine_reweight(complete(4, 1), 0, 1, 0, 5), complete(4, 5));
}

TEST(LineGraph, Examples) {
    EXPECT_TRUE(same(line_graph(star(3)), complete(3)));
    EXPECT_TRUE(same(line_graph(path(3)), complete(2)));
    // K_2 box K_3
    GraphBuilder rook(6);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 3; ++d)
                    if ((a == c) != (b == d)) rook.set(a * 3 + b, c * 3 + d, 1);
    EXPECT_TRUE(same(line_graph(bipartite(2, 3)), rook.build()));
}

TEST(LineGraph, Degrees) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        WeightedGraph h = random_simple(rng, 2 + i % 6, 0.5);
        WeightedGraph l = line_graph(h);
        auto edges = h.edges();
        ASSERT_EQ(std::size_t(l.n()), edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            std::size_t deg = h.row(edges[e].u).size() + h.row(edges[e].v).size() - 2;
            EXPECT_EQ(l.row(int(e)).size(), deg);
        }
    }
}

TEST(Products, Examples) {
    EXPECT_TRUE(same(join(coclique(2), coclique(3)), bipartite(2, 3)));
    EXPECT_TRUE(same(categorical_product(complete(2), complete(2)), matching(2)));
    EXPECT_TRUE(same(lexicographic_product(complete(3), coclique(2)), complement(matching(3))));
    WeightedGraph u = disjoint_union(path(3), complete(2));
    EXPECT_EQ(u.n(), 5);
    EXPECT_EQ(u.weight(3, 4), Rational(1));
    EXPECT_EQ(u.weight(2, 3), Rational(0));
}

TEST(Compose, Examples) {
    OrnamentedGraph og{complete(2), {coclique(2), coclique(3)}};
    EXPECT_TRUE(same(compose(og), bipartite(2, 3)));
    WeightedGraph p4 = path(4);
    EXPECT_EQ(compose({p4, std::vector<WeightedGraph>(4, WeightedGraph(1))}), p4);
    EXPECT_TRUE(same(compose({WeightedGraph(1), {complete(5)}}), complete(5)));
}

TEST(Compose, MatchesBlowUpAndLex) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        WeightedGraph base = random_simple(rng, 1 + i % 4, 0.5);
        std::vector<std::int64_t> k;
        std::vector<WeightedGraph> orn;
        for (int v = 0; v < base.n(); ++v) {
            k.push_back(1 + (i + v) % 3);
            orn.push_back(coclique(int(k.back())));
        }
        EXPECT_TRUE(same(compose({base, orn}), blow_up(base, k)));
        WeightedGraph h = random_weighted(rng, 1 + i % 3);
        EXPECT_TRUE(same(lexicographic_product(base, h), compose({base, std::vector<WeightedGraph>(std::size_t(base.n()), h)})));
    }
}

TEST(BlowUp, Examples) {
    std::int64_t four[] = {4};
    EXPECT_TRUE(same(blow_up(WeightedGraph(1), four), coclique(4)));
    EXPECT_TRUE(same(blow_up(complete(1, 1), four), complete(4)));
    std::int64_t two_three[] = {2, 3};
    EXPECT_TRUE(same(blow_up(complete(2), two_three), bipartite(2, 3)));
}

TEST(Canonical, Examples) {
    EXPECT_TRUE(is_isomorphic(line_graph(star(3)), complete(3)));
    EXPECT_FALSE(is_isomorphic(complete(3), path(3)));
    EXPECT_FALSE(is_isomorphic(complete(3, 1), complete(3, 2)));
    EXPECT_THROW(canonical_form(WeightedGraph(13)), ResourceError);
}

TEST(Canonical, RelabellingInvariant) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 7;
        WeightedGraph g = i % 2 ? random_simple(rng, n, 0.45) : random_weighted(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_form(g).key, canonical_form(relabel(g, perm)).key);
    }
}

TEST(Canonical, AgreesWithBacktracking) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + i % 5;
        WeightedGraph a = random_simple(rng, n, 0.5), b = random_simple(rng, n, 0.5);
        if (a.edge_count() != b.edge_count()) continue;
        same(a, b);
    }
}

TEST(Canonical, CountsUnlabelledGraphs) {
    // 1, 2, 4, 11, 34 classes on 1..5 vertices
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::set<std::string> keys;
        for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
            GraphBuilder b(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1u) b.set(pairs[i].first, pairs[i].second, 1);
            keys.insert(canonical_form(b.build()).key);
        }
        EXPECT_EQ(int(keys.size()), oracle::unlabelled_graph_count(n));
        const int known[] = {1, 2, 4, 11, 34};
        EXPECT_EQ(int(keys.size()), known[n - 1]);
    }
}
