#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strongpoly/graph.hpp"

namespace strongpoly {

enum class FamilyKind {
    Complete,              // K_k
    Coclique,              // k isolated vertices
    LoopedComplete,        // K_k with every loop weighted ell
    LoopedCoclique,        // k isolated looped vertices
    Matching,              // k disjoint edges
    CompleteBipartite,     // K_{j,k}
    CompleteMultipartite,  // l parts of size k
    Hypercube,             // Q_k
    Johnson,               // J_{k,l,D}
    Rook,                  // K_j box K_k
    Pow2Loop,              // vertices 1..k, a loop at every power of two
    Windmill,              // k1 triangles and k2 pendant 2-paths sharing one centre
};

struct FamilyId {
    FamilyKind kind = FamilyKind::Complete;
    Rational loop_weight = 1;    // LoopedComplete
    int johnson_l = 1;           // Johnson subset size
    std::vector<int> johnson_d;  // Johnson intersection sizes, sorted

    /// Number of integer parameters.
    int arity() const;
    /// Short name used in spec strings: K, Kbar, Kloop, Loops, Matching, Kbip,
    /// Kmulti, Q, J, Rook, Pow2Loop, Windmill.
    std::string name() const;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

inline constexpr int kMaxHypercube = 10;
inline constexpr std::int64_t kMaxJohnsonVertices = 300;

/// Vertex orderings: Hypercube vertex = bit pattern; Johnson vertices are the
/// l-subsets of {0..k-1} in colex order; Rook vertex (a, b) is a*k + b;
/// CompleteMultipartite part p occupies p*k .. p*k+k-1; Pow2Loop vertex i-1 is
/// label i; Windmill: centre 0, then triangle pairs, then path pairs (inner first).
WeightedGraph generate(const FamilyId& f, std::span<const std::int64_t> params);

/// A parameter slot in a spec string: a name or an integer literal.
using FamilyArg = std::variant<std::string, std::int64_t>;

struct FamilySpec {
    FamilyId id;
    std::vector<FamilyArg> args;
};

/// Parses strings such as "K(k)", "Kloop(k,2)", "Q(k)", "J(k,2,{0})", "Kbip(j,3)".
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace strongpoly
