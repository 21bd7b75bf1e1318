#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "strongpoly/graph.hpp"

namespace fixture {

using strongpoly::Multigraph;
using strongpoly::Rational;
using strongpoly::WeightedGraph;

inline WeightedGraph simple(int n, std::initializer_list<std::pair<int, int>> edges) {
    strongpoly::GraphBuilder b(n);
    for (auto [u, v] : edges) b.set(u, v, 1);
    return b.build();
}

inline WeightedGraph complete(int n, Rational loop = 0) {
    strongpoly::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (u != v || !loop.is_zero()) b.set(u, v, u == v ? loop : Rational(1));
    return b.build();
}

inline WeightedGraph coclique(int n) { return WeightedGraph(n); }

inline WeightedGraph looped_coclique(int n) {
    strongpoly::GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.set(v, v, 1);
    return b.build();
}

inline WeightedGraph path(int n) {
    strongpoly::GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.set(v, v + 1, 1);
    return b.build();
}

inline WeightedGraph cycle(int n) {
    strongpoly::GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.set(v, (v + 1) % n, 1);
    return b.build();
}

inline WeightedGraph star(int k) {
    strongpoly::GraphBuilder b(k + 1);
    for (int v = 1; v <= k; ++v) b.set(0, v, 1);
    return b.build();
}

inline WeightedGraph bipartite(int j, int k) {
    strongpoly::GraphBuilder b(j + k);
    for (int u = 0; u < j; ++u)
        for (int v = 0; v < k; ++v) b.set(u, j + v, 1);
    return b.build();
}

inline WeightedGraph matching(int k) {
    strongpoly::GraphBuilder b(2 * k);
    for (int i = 0; i < k; ++i) b.set(2 * i, 2 * i + 1, 1);
    return b.build();
}

inline Multigraph multi(int n, std::vector<std::pair<int, int>> edges) { return Multigraph(n, std::move(edges)); }

inline Multigraph as_multi(const WeightedGraph& h) { return Multigraph::from_weighted(h); }

}  // namespace fixture
