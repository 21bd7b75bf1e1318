#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strongpoly/graph.hpp"

namespace strongpoly {

struct CotreeNode {
    std::optional<int> parent;
    /// 0 = union, 1 = join, -1 = leaf
    int label = -1;
    std::int64_t mult = 1;

    friend bool operator==(const CotreeNode&, const CotreeNode&) = default;
};

/// Rooted tree with union/join internal nodes; internal nodes have at least one child.
class Cotree {
public:
    Cotree();  // a single leaf
    explicit Cotree(std::vector<CotreeNode> nodes);

    int size() const { return int(nodes_.size()); }
    int root() const { return root_; }
    const CotreeNode& node(int s) const { return nodes_[s]; }
    const std::vector<CotreeNode>& nodes() const { return nodes_; }
    const std::vector<int>& children(int s) const { return children_[s]; }
    bool is_leaf(int s) const { return nodes_[s].label < 0; }
    std::vector<int> preorder() const;
    int leaf_count() const;
    bool unit_mults() const;
    Cotree with_mults(std::span<const std::int64_t> mults) const;

    friend bool operator==(const Cotree& a, const Cotree& b) { return a.nodes_ == b.nodes_; }

private:
    std::vector<CotreeNode> nodes_;
    int root_ = 0;
    std::vector<std::vector<int>> children_;
};

/// Leaves become vertices in preorder; two are adjacent iff their lowest common ancestor is a join.
WeightedGraph eval_cotree(const Cotree& t);
/// Every non-root node s is replaced by mult(s) copies of its subtree; root mult must be 1.
Cotree cotree_branch(const Cotree& t);
Cotree cotree_branch(const Cotree& t, std::span<const std::int64_t> k);
Cotree cotree_complement(const Cotree& t);

/// hom(G, eval_cotree(cotree_branch(t))) computed on t itself; |V(G)| <= 12.
Rational hom_cotree(const Multigraph& g, const Cotree& t);
/// Lifts children of same-label parents and splices out unary internal nodes. Unit mults only.
Cotree normalize(const Cotree& t);
std::string canonical_string(const Cotree& t);

/// The alternating cotree of h, or nullopt when h is not a cograph (contains an induced P_4).
std::optional<Cotree> cograph_cotree(const WeightedGraph& h);
bool is_cograph(const WeightedGraph& h);

inline constexpr int kGammaCap = 16;
/// Multiplicity-collapsed cotree realising h with the fewest nodes.
Cotree gamma_witness(const WeightedGraph& h);
/// Minimum node count of a branching cotree representing h; h a cograph, |V| <= 16.
int gamma(const WeightedGraph& h);

}  // namespace strongpoly
