#pragma once

#include <cstdint>
#include <vector>

#include "strongpoly/graph.hpp"

namespace strongpoly {

struct HomOptions {
    /// Maximum number of partial assignments visited per connected component of G.
    std::uint64_t budget = 100'000'000;
    /// Components of G with more vertices than this skip the module tables
    /// (which have 2^|V| entries) and enumerate on the unreduced target.
    int table_limit = 12;
};

/// Preprocessed target graph. Twin modules of H are merged repeatedly: two
/// vertices whose rows agree outside the pair are fused into one super vertex
/// that carries, per subset S of V(G), the weighted count of ways to map S into it.
class CompiledTarget {
public:
    explicit CompiledTarget(WeightedGraph h);

    const WeightedGraph& target() const { return h_; }
    /// Number of super vertices left after module merging.
    int reduced_size() const { return int(reps_.size()); }

    struct Merge {
        int keep;
        int drop;
        Rational mu;
    };
    const std::vector<Merge>& merges() const { return merges_; }
    const std::vector<int>& representatives() const { return reps_; }
    /// Row of super vertex i (indices into representatives()).
    const std::vector<std::pair<int, Rational>>& reduced_row(int i) const { return rows_[i]; }
    bool integral() const { return integral_; }

private:
    WeightedGraph h_;
    std::vector<Merge> merges_;
    std::vector<int> reps_;
    std::vector<std::vector<std::pair<int, Rational>>> rows_;
    bool integral_ = true;
};

/// hom(G, H) = sum over maps f: V(G) -> V(H) of the product over edges uv of
/// a_{f(u) f(v)} (parallel edges and loops counted with multiplicity).
Rational hom(const Multigraph& g, const WeightedGraph& h, const HomOptions& opt = {});
Rational hom(const Multigraph& g, const CompiledTarget& h, const HomOptions& opt = {});

/// Direct evaluation of the defining sum over all |V(H)|^|V(G)| maps.
Rational hom_by_definition(const Multigraph& g, const WeightedGraph& h,
                           std::uint64_t budget = 100'000'000);

/// Number of subgraphs of simple g isomorphic to simple s.
BigInt sub_count(const WeightedGraph& s, const WeightedGraph& g);
/// Number of induced subgraphs of simple g isomorphic to simple s.
BigInt induced_count(const WeightedGraph& s, const WeightedGraph& g);
/// Number of homomorphisms from g onto s (surjective on vertices and edges);
/// s simple, computed by inclusion-exclusion over hom.
BigInt sur_count(const Multigraph& g, const WeightedGraph& s, const HomOptions& opt = {});

}  // namespace strongpoly
