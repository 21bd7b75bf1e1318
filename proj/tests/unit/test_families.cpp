#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strongpoly/canonical.hpp"
#include "strongpoly/errors.hpp"
#include "strongpoly/families.hpp"
#include "strongpoly/graph_polynomials.hpp"
#include "strongpoly/hom.hpp"

using namespace strongpoly;
using namespace fixture;

namespace {

WeightedGraph gen(FamilyKind kind, std::vector<std::int64_t> params) {
    FamilyId f;
    f.kind = kind;
    return generate(f, params);
}

Multigraph random_multigraph(std::mt19937_64& rng, int n, int m) {
    std::uniform_int_distribution<int> vertex(0, n - 1);
    Multigraph g(n);
    for (int i = 0; i < m; ++i) g.add_edge(vertex(rng), vertex(rng));
    return g;
}

std::vector<std::size_t> degrees(const WeightedGraph& h) {
    std::vector<std::size_t> d;
    for (int v = 0; v < h.n(); ++v) d.push_back(h.row(v).size());
    return d;
}

}  // namespace

TEST(Families, Hypercube) {
    WeightedGraph q3 = gen(FamilyKind::Hypercube, {3});
    EXPECT_EQ(q3.n(), 8);
    EXPECT_EQ(q3.edge_count(), 12u);
    for (auto d : degrees(q3)) EXPECT_EQ(d, 3u);
    for (std::int64_t k = 1; k <= 8; ++k) {
        WeightedGraph q = gen(FamilyKind::Hypercube, {k});
        EXPECT_EQ(hom(Multigraph(1), q), Rational(2).pow(std::uint64_t(k)));
        EXPECT_EQ(hom(as_multi(complete(2)), q), Rational(k) * Rational(2).pow(std::uint64_t(k)));
    }
}

TEST(Families, Johnson) {
    FamilyId j = parse_family_spec("J(k,1,{0})").id;
    std::int64_t five[] = {5};
    EXPECT_TRUE(is_isomorphic(generate(j, five), complete(5)));
    WeightedGraph petersen = generate(parse_family_spec("J(k,2,{0})").id, five);
    EXPECT_EQ(petersen.n(), 10);
    for (auto d : degrees(petersen)) EXPECT_EQ(d, 3u);
    EXPECT_EQ(hom(as_multi(cycle(3)), petersen), Rational(0));
}

TEST(Families, Pow2Loop) {
    WeightedGraph h = gen(FamilyKind::Pow2Loop, {5});
    EXPECT_EQ(h.n(), 5);
    EXPECT_EQ(h.edge_count(), 3u);
    for (int label = 1; label <= 5; ++label)
        EXPECT_EQ(h.loop(label - 1), Rational(label == 1 || label == 2 || label == 4 ? 1 : 0));
}

TEST(Families, Windmill) {
    WeightedGraph h = gen(FamilyKind::Windmill, {2, 2});
    EXPECT_EQ(h.n(), 9);
    EXPECT_EQ(hom(Multigraph(1), h), Rational(9));
}

TEST(Families, RookIsLineGraphOfBipartite) {
    for (std::int64_t j = 1; j <= 4; ++j)
        for (std::int64_t k = 1; k <= 4; ++k)
            EXPECT_TRUE(is_isomorphic(gen(FamilyKind::Rook, {j, k}), line_graph(bipartite(int(j), int(k))), 16));
}

TEST(Families, SmallGenerators) {
    EXPECT_EQ(gen(FamilyKind::Complete, {4}), complete(4));
    EXPECT_EQ(gen(FamilyKind::Coclique, {3}), coclique(3));
    EXPECT_EQ(gen(FamilyKind::LoopedCoclique, {3}), looped_coclique(3));
    EXPECT_TRUE(is_isomorphic(gen(FamilyKind::Matching, {3}), matching(3)));
    EXPECT_TRUE(is_isomorphic(gen(FamilyKind::CompleteBipartite, {2, 3}), bipartite(2, 3)));
    EXPECT_TRUE(is_isomorphic(gen(FamilyKind::CompleteMultipartite, {3, 2}), complement(matching(3))));
    EXPECT_EQ(generate(parse_family_spec("Kloop(k,2)").id, std::vector<std::int64_t>{3}), complete(3, 2));
}

TEST(Families, SpecStrings) {
    for (const char* s : {"K(k)", "Kbar(j)", "Q(k)", "J(k,2,{0})", "Kbip(j,3)", "Rook(j,k)", "Windmill(a,b)"})
        EXPECT_EQ(format_family_spec(parse_family_spec(s)), s);
    EXPECT_THROW(parse_family_spec("K(j,k)"), ParseError);
    EXPECT_THROW(parse_family_spec("Nope(k)"), ParseError);
    EXPECT_THROW(gen(FamilyKind::Hypercube, {kMaxHypercube + 1}), ResourceError);
    EXPECT_THROW(gen(FamilyKind::Complete, {0}), DomainError);
}

TEST(Families, Binomial) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(4, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Chromatic, Examples) {
    MultiPoly k = MultiPoly::variable({"k"}, 0), one = MultiPoly::constant({"k"}, 1);
    EXPECT_EQ(chromatic_poly(as_multi(complete(3))), k * (k - one) * (k - one - one));
    MultiPoly km1 = k - one;
    EXPECT_EQ(chromatic_poly(as_multi(cycle(4))), km1 * km1 * km1 * km1 + km1);
    EXPECT_EQ(chromatic_poly(Multigraph(3)), k * k * k);
    EXPECT_TRUE(chromatic_poly(Multigraph(1, {{0, 0}})).is_zero());
}

TEST(Chromatic, MatchesColouringCount) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 60; ++i) {
        Multigraph g = random_multigraph(rng, 1 + i % 5, i % 8);
        MultiPoly p = chromatic_poly(g);
        for (std::int64_t k = 1; k <= 4; ++k) {
            std::int64_t at[] = {k};
            EXPECT_EQ(p.evaluate(std::span<const std::int64_t>(at)),
                      Rational(oracle::proper_colourings(g.n(), oracle::edges_of(g), int(k))));
        }
    }
}

TEST(Tutte, Examples) {
    EXPECT_EQ(tutte_poly(as_multi(complete(3))).str(), "x^2 + x + y");
    EXPECT_EQ(tutte_poly(Multigraph(1, {{0, 0}})).str(), "y");
    EXPECT_EQ(tutte_poly(as_multi(complete(2))).str(), "x");
    EXPECT_EQ(tutte_hom_formula(as_multi(complete(3)), 3, 2), Rational(66));
}

TEST(Tutte, MatchesRankExpansion) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 60; ++i) {
        Multigraph g = random_multigraph(rng, 1 + i % 5, i % 8);
        MultiPoly t = tutte_poly(g);
        for (auto [x, y] : {std::pair(2, 3), std::pair(-1, 2), std::pair(0, 5)}) {
            Rational at[] = {x, y};
            EXPECT_EQ(t.evaluate(std::span<const Rational>(at)),
                      Rational(oracle::tutte(g.n(), oracle::edges_of(g), x, y)));
        }
    }
}

TEST(Tutte, HomIdentity) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        Multigraph g = random_multigraph(rng, 1 + i % 4, i % 5);
        for (int k = 1; k <= 4; ++k)
            for (int l : {0, 2, 3, 4})
                EXPECT_EQ(tutte_hom_formula(g, k, l),
                          Rational(oracle::hom(g.n(), oracle::edges_of(g), oracle::complete(k, l))));
    }
    EXPECT_THROW(tutte_hom_formula(as_multi(complete(2)), 2, 1), DomainError);
}

TEST(Flow, Examples) {
    EXPECT_EQ(hom(as_multi(cycle(3)), complete(2, -1)), Rational(-8));
    EXPECT_TRUE(flow_count_check(as_multi(cycle(3)), 2));
    EXPECT_EQ(flow_polynomial_value(as_multi(path(4)), 3), Rational(0));
    EXPECT_TRUE(flow_count_check(as_multi(path(4)), 3));
    EXPECT_EQ(flow_polynomial_value(as_multi(cycle(4)), 3), Rational(2));
    EXPECT_TRUE(flow_count_check(as_multi(cycle(4)), 3));
}

TEST(Flow, MatchesEnumeration) {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 50; ++i) {
        Multigraph g = random_multigraph(rng, 1 + i % 4, i % 6);
        for (int k = 2; k <= 4; ++k) {
            EXPECT_EQ(flow_polynomial_value(g, k), Rational(oracle::nowhere_zero_flows(g.n(), oracle::edges_of(g), k)));
            EXPECT_TRUE(flow_count_check(g, k));
        }
    }
}
