#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strongpoly/graph.hpp"
#include "strongpoly/hom.hpp"

namespace strongpoly {

struct TreeNode {
    std::optional<int> parent;
    /// Levels of the ancestors this node is joined to, sorted; root level is 0.
    std::vector<int> A;
    std::string ornament = "K1";
    std::int64_t mult = 1;

    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Rooted tree whose nodes carry the colour (A, ornament, mult). The root has
/// A empty and mult 1; a node at level l has A inside {0..l-1}.
class ColouredRootedTree {
public:
    ColouredRootedTree();  // a single root
    explicit ColouredRootedTree(std::vector<TreeNode> nodes);

    int size() const { return int(nodes_.size()); }
    int root() const { return root_; }
    const TreeNode& node(int s) const { return nodes_[s]; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const std::vector<int>& children(int s) const { return children_[s]; }
    /// |P(s)| - 1
    int level(int s) const { return level_[s]; }
    /// Largest level plus one (number of nodes on a longest root path).
    int height() const;
    /// P(s): root first, s last.
    std::vector<int> chain(int s) const;
    /// B(s) in preorder, s first.
    std::vector<int> subtree(int s) const;
    /// Nodes in preorder (children in index order).
    std::vector<int> preorder() const;
    bool unit_mults() const;

    ColouredRootedTree with_mults(std::span<const std::int64_t> mults) const;
    ColouredRootedTree with_unit_mults() const;

    friend bool operator==(const ColouredRootedTree& a, const ColouredRootedTree& b) { return a.nodes_ == b.nodes_; }

private:
    std::vector<TreeNode> nodes_;
    int root_ = 0;
    std::vector<std::vector<int>> children_;
    std::vector<int> level_;
};

using OrnamentTable = std::map<std::string, WeightedGraph>;

/// Canonical string of the subtree at s: colour plus sorted child strings.
/// With `root_mult` false the multiplicity of s itself is left out.
std::string canonical_string(const ColouredRootedTree& t, int s, bool root_mult = true, bool mults = true);
std::string canonical_string(const ColouredRootedTree& t);
bool colour_isomorphic(const ColouredRootedTree& a, const ColouredRootedTree& b);

/// Ancestor-descendant comparability graph (simple).
WeightedGraph closure(const ColouredRootedTree& t, bool ignore_mult = false);
/// s is joined to its ancestor at level i for every i in A_s.
WeightedGraph decode_subgraph(const ColouredRootedTree& t, bool ignore_mult = false);
/// `parent[v]` gives the elimination tree on V(H); node v of the result is vertex v.
ColouredRootedTree encode_subgraph(const WeightedGraph& h, const std::vector<std::optional<int>>& parent);

/// Replaces B(s) by mult(s) copies pendant from p(s); the copied roots get mult 1.
ColouredRootedTree branch_at(const ColouredRootedTree& t, int s);

struct BranchedTree {
    ColouredRootedTree tree;  // all mults 1
    std::vector<int> origin;  // node of the input each node copies
};
/// Branches everywhere, using the tree's own multiplicities.
BranchedTree k_branching(const ColouredRootedTree& t);
BranchedTree k_branching(const ColouredRootedTree& t, std::span<const std::int64_t> k);

/// decode(k_branching(t)) composed with the ornament of each origin node.
WeightedGraph branched_composition(const ColouredRootedTree& t, const OrnamentTable& ornaments);

/// Path tree of d+1 nodes rooted at an endpoint, node l joined to all ancestors,
/// ornament "R" on the root and "F<l>" below, mult k_l; table has R = K_1^1 and F<l> = K_{j_l}^1.
std::pair<ColouredRootedTree, OrnamentTable> path_tree_composition(std::span<const std::int64_t> j,
                                                                   std::span<const std::int64_t> k);
/// Sum over ordered partitions V_0..V_d of V(G) of
/// prod_l j_l^{|V_l|} k_l^{c(G[V - V_0 - ... - V_{l-1}])}.
Rational path_closure_state_sum(const Multigraph& g, std::span<const std::int64_t> j, std::span<const std::int64_t> k,
                                std::uint64_t budget = 100'000'000);

/// hom(G, branched_composition(t, ornaments)) by dynamic programming over t, without
/// building the composition; the cost does not grow with the multiplicities. |V(G)| <= 12.
Rational hom_branched(const Multigraph& g, const ColouredRootedTree& t, const OrnamentTable& ornaments,
                      const HomOptions& opt = {});

struct BranchingCore {
    ColouredRootedTree tree;
};
BranchingCore branching_core(const ColouredRootedTree& t);
int bc(const ColouredRootedTree& t);

inline constexpr int kMinBcCap = 8;

struct MinBcResult {
    int value = 0;
    /// Core of the chosen encoding (with multiplicities).
    ColouredRootedTree core;
    /// Elimination tree of the chosen encoding over V(H).
    std::vector<std::optional<int>> parent;
};
/// Minimum bc over all encodings of simple h; |V(h)| <= 8. Vertex labels, when
/// given, are used as ornament labels.
MinBcResult min_bc(const WeightedGraph& h, const std::vector<std::string>& labels = {});

struct FamilyGroup {
    ColouredRootedTree shape;             // core with unit multiplicities
    std::vector<int> non_root;            // nodes of shape indexed by the tuples, preorder
    std::vector<std::size_t> members;     // indices into the input
    std::vector<std::vector<std::int64_t>> indices;  // one tuple per member
};
struct PartitionResult {
    std::vector<FamilyGroup> groups;
    std::vector<std::size_t> unpartitionable;  // min bc above the bound
};
PartitionResult partition_family(const std::vector<WeightedGraph>& graphs, int bc_bound);

}  // namespace strongpoly
