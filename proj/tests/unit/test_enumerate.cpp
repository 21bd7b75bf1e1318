#include <map>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "enumerate.hpp"
#include "oracles.hpp"
#include "strongpoly/canonical.hpp"

using namespace strongpoly;

TEST(Enumerate, SimpleGraphs) {
    std::map<int, int> per_n;
    for (const auto& g : suite::simple_graphs(5, 10)) ++per_n[g.n()];
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(per_n[n], oracle::unlabelled_graph_count(n));
    EXPECT_EQ(per_n[5], 34);
    EXPECT_EQ(suite::simple_graphs(5, 7).size(), 48u);
}

TEST(Enumerate, ConnectedGraphs) {
    std::map<int, int> per_n;
    for (const auto& g : suite::connected_graphs(4)) {
        EXPECT_EQ(g.component_count(), 1);
        ++per_n[g.n()];
    }
    EXPECT_EQ(per_n, (std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 6}}));
}

TEST(Enumerate, Multigraphs) {
    // loops and parallel edges allowed, no isolated vertex: 2, 7, 23, 79 classes with 1..4 edges
    std::map<std::size_t, int> per_m;
    std::set<std::string> keys;
    for (const auto& g : suite::multigraphs(4)) {
        ++per_m[g.m()];
        EXPECT_TRUE(keys.insert(canonical_key(g)).second);
    }
    EXPECT_EQ(per_m, (std::map<std::size_t, int>{{1, 2}, {2, 7}, {3, 23}, {4, 79}}));
}

TEST(Enumerate, RootedTrees) {
    std::map<std::size_t, int> per_n;
    for (const auto& p : suite::rooted_trees(6)) ++per_n[p.size()];
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(per_n[std::size_t(n)], int(oracle::rooted_trees(n).size()));
    EXPECT_EQ(per_n[6], 20);
}
