#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strongpoly/rational.hpp"

namespace strongpoly {

struct Neighbor {
    int to;
    Rational w;
};

struct WeightedEdge {
    int u;
    int v;
    Rational w;
};

/// Finite symmetric weighted graph on vertices 0..n-1. Loops are allowed and
/// an absent pair has weight 0. Immutable once built; see GraphBuilder.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n);

    int n() const { return n_; }

    /// Non-zero entries of row v sorted by neighbour (loop included).
    std::span<const Neighbor> row(int v) const {
        return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
    }
    Rational weight(int u, int v) const;
    Rational loop(int v) const { return weight(v, v); }

    /// Number of non-zero pairs {u,v} with u <= v.
    std::size_t edge_count() const { return pairs_; }
    /// Edges with u <= v, ordered by (u, v).
    std::vector<WeightedEdge> edges() const;

    bool has_loops() const;
    /// 0/1 weights and no loops.
    bool is_simple() const;
    /// every weight (loops included) is 1
    bool is_zero_one() const;
    bool has_integer_weights() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::size_t pairs_ = 0;
    std::vector<std::size_t> offset_{0};
    std::vector<Neighbor> adj_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    int n() const { return n_; }
    /// Overwrites any earlier weight on {u,v}.
    GraphBuilder& set(int u, int v, Rational w);
    /// Adds to the weight on {u,v}.
    GraphBuilder& add(int u, int v, Rational w);
    void reserve(std::size_t edges) { ops_.reserve(edges); }

    WeightedGraph build() const;

private:
    struct Op {
        int u, v;
        Rational w;
        bool accumulate;
    };
    int n_;
    std::vector<Op> ops_;
};

/// Undirected multigraph: loops and parallel edges allowed.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n) {}
    Multigraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    Multigraph& add_edge(int u, int v);

    /// Requires every weight to be a positive integer.
    static Multigraph from_weighted(const WeightedGraph& g);
    /// Weight of {u,v} is the number of parallel edges.
    WeightedGraph to_weighted() const;

    bool is_simple() const;
    std::size_t loop_count() const;
    /// Component index per vertex; returns the number of components.
    int components(std::vector<int>& comp) const;
    int component_count() const;
    /// |V| - c(G)
    int rank() const { return n_ - component_count(); }
    /// |E| - |V| + c(G)
    int nullity() const { return int(m()) - rank(); }

    Multigraph delete_edges(const std::vector<bool>& removed) const;
    /// Identify the endpoints of each edge marked in `contract`; edges marked in
    /// `remove` are dropped. Surviving edges parallel to a contracted edge become loops.
    Multigraph minor(const std::vector<bool>& contract, const std::vector<bool>& remove) const;
    Multigraph induced(const std::vector<int>& vertices) const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

/// Simple base graph with one weighted ornament per base vertex.
struct OrnamentedGraph {
    WeightedGraph base;
    std::vector<WeightedGraph> ornaments;
};

// Constructions. Vertex orderings of results are documented per function.

/// Simple graphs only.
WeightedGraph complement(const WeightedGraph& h);
/// 0/1 weights (loops included); a pair is present iff absent in h, loops too.
WeightedGraph looped_complement(const WeightedGraph& h);
/// off-diagonal a -> alpha + beta*a, diagonal a -> alpha' + beta'*a
WeightedGraph affine_reweight(const WeightedGraph& h, const Rational& alpha, const Rational& beta,
                              const Rational& alpha_d, const Rational& beta_d);
/// Simple graphs only. Vertex i is the i-th edge of h.edges().
WeightedGraph line_graph(const WeightedGraph& h);
/// Vertices of f first, then those of h shifted by f.n().
WeightedGraph disjoint_union(const WeightedGraph& f, const WeightedGraph& h);
/// Vertex (u, v) is u * h.n() + v.
WeightedGraph categorical_product(const WeightedGraph& f, const WeightedGraph& h);
/// Simple graphs only; ordering as disjoint_union.
WeightedGraph join(const WeightedGraph& f, const WeightedGraph& h);
/// Ornaments laid out in base-vertex order.
WeightedGraph compose(const OrnamentedGraph& og);
/// h with 0/1 weights; vertex v becomes K_{k_v} if looped else an independent set of size k_v.
WeightedGraph blow_up(const WeightedGraph& h, std::span<const std::int64_t> k);
/// f simple; vertex (u, v) is u * h.n() + v.
WeightedGraph lexicographic_product(const WeightedGraph& f, const WeightedGraph& h);

WeightedGraph induced_subgraph(const WeightedGraph& h, std::span<const int> vertices);
/// Vertex v of h becomes perm[v].
WeightedGraph relabel(const WeightedGraph& h, std::span<const int> perm);
/// Component index per vertex; returns the number of components.
int connected_components(const WeightedGraph& h, std::vector<int>& comp);

}  // namespace strongpoly
