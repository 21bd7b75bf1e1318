#pragma once

#include <span>
#include <string>
#include <vector>

#include "strongpoly/graph.hpp"

namespace strongpoly {

inline constexpr int kDefaultCanonicalCap = 12;

struct CanonicalForm {
    /// Equal keys iff the (coloured) graphs are isomorphic.
    std::string key;
    /// position[v] = index of v in the canonical ordering
    std::vector<int> position;
};

/// Canonical labelling by colour refinement plus individualisation. Throws
/// ResourceError when h has more than `cap` vertices.
CanonicalForm canonical_form(const WeightedGraph& h, int cap = kDefaultCanonicalCap);
/// Vertex-coloured variant; isomorphisms must preserve colours.
CanonicalForm canonical_form(const WeightedGraph& h, std::span<const int> colours,
                             int cap = kDefaultCanonicalCap);

bool is_isomorphic(const WeightedGraph& a, const WeightedGraph& b, int cap = kDefaultCanonicalCap);

std::string canonical_key(const Multigraph& g, int cap = kDefaultCanonicalCap);

}  // namespace strongpoly
