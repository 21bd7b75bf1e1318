#pragma once

#include <optional>
#include <vector>

#include "strongpoly/graph.hpp"

namespace strongpoly::suite {

/// Simple graphs on 1..max_n vertices with at most max_m edges, one per
/// isomorphism class. Isolated vertices count.
std::vector<Multigraph> simple_graphs(int max_n, int max_m);

/// Connected simple graphs on 1..max_n vertices, one per class.
std::vector<Multigraph> connected_graphs(int max_n);

/// Multigraphs (loops and parallel edges allowed) with 1..max_m edges and no
/// isolated vertex, one per class. Built edge by edge: every such graph with
/// m+1 edges loses an edge (and any vertex left isolated) to one with m.
std::vector<Multigraph> multigraphs(int max_m);

using ParentArray = std::vector<std::optional<int>>;

/// Rooted unlabelled trees with 1..max_nodes nodes; node 0 is the root and parent[i] < i.
std::vector<ParentArray> rooted_trees(int max_nodes);

}  // namespace strongpoly::suite
