#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// except the two adapters at the top, which only read graph entries.

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "strongpoly/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<mpq_class>>;
using Edges = std::vector<std::pair<int, int>>;

Matrix matrix_of(const strongpoly::WeightedGraph& h);
Edges edges_of(const strongpoly::Multigraph& g);
strongpoly::WeightedGraph graph_of(const Matrix& a);

Matrix zero(int n);
Matrix complete(int n, const mpq_class& loop = 0);
Matrix coclique(int n);
void link(Matrix& a, int u, int v, const mpq_class& w = 1);

/// Sum over all maps V(G) -> V(H) of the edge-weight product.
mpq_class hom(int n, const Edges& g, const Matrix& h);

/// Proper k-colourings, counted by trying every colouring.
long long proper_colourings(int n, const Edges& g, int k);

/// Sum over edge subsets A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
mpq_class tutte(int n, const Edges& g, const mpq_class& x, const mpq_class& y);

/// Nowhere-zero Z_k flows on a fixed orientation, by enumeration.
long long nowhere_zero_flows(int n, const Edges& g, int k);

/// Backtracking isomorphism test on weighted matrices.
bool isomorphic(const Matrix& a, const Matrix& b);

/// Number of simple graphs on n vertices up to isomorphism, n <= 5.
int unlabelled_graph_count(int n);

struct CoNode {
    int parent;  // -1 for the root
    int label;   // 0 union, 1 join, -1 leaf
    int mult;
};
/// Graph of the cotree after replacing every node by mult copies.
Matrix branched_cotree(const std::vector<CoNode>& t);
/// Fewest nodes of a cotree whose branching is isomorphic to h; searches
/// shapes up to max_nodes with multiplicities up to |V(h)|. nullopt if none.
std::optional<int> gamma(const Matrix& h, int max_nodes);

/// Minimum branching-core size over every rooted tree on V(h) in which each
/// edge joins an ancestor and a descendant.
int min_bc(const Matrix& h);

struct TreeNode {
    int parent;  // -1 for the root
    std::vector<int> A;
    int ornament;  // index into the ornament list
    int mult;
};
/// Copies every non-root node mult times (nested), joins copies to ancestors
/// at the levels in A, then substitutes the ornaments.
Matrix branched_composition(const std::vector<TreeNode>& t, const std::vector<Matrix>& ornaments);

/// Rooted unlabelled trees on n nodes as parent arrays with parent[i] < i.
std::vector<std::vector<int>> rooted_trees(int n);

}  // namespace oracle
