#pragma once

#include "strongpoly/hom.hpp"

namespace strongpoly {

/// Sum over disjoint C, D ⊆ E(G) of (-1)^{|E|-|D|} hom(G/C - D, H).
/// Equals hom(G, complement(H)) for simple H.
Rational hom_via_minor_expansion(const Multigraph& g, const WeightedGraph& h, const HomOptions& opt = {});

/// Sum over D ⊆ E(G) of (-1)^{|E|-|D|} hom(G - D, H).
/// Equals hom(G, looped_complement(H)) for 0/1-weighted H.
Rational hom_via_spanning_expansion(const Multigraph& g, const WeightedGraph& h, const HomOptions& opt = {});

/// Sum over homomorphisms f from G into the base with a loop added at every
/// vertex, of the product over base vertices v of hom(G[f^-1(v)], F_v).
/// Equals hom(G, compose(og)).
Rational hom_via_composition_expansion(const Multigraph& g, const OrnamentedGraph& og,
                                       const HomOptions& opt = {});

/// Four-way edge expansion of hom(G, affine_reweight(H, alpha, beta, alpha_d, beta_d)).
/// Each edge is deleted (factor alpha), kept (beta), contracted and removed
/// (alpha_d - alpha), or contracted and kept as a loop (beta_d - beta).
Rational hom_via_affine_expansion(const Multigraph& g, const WeightedGraph& h, const Rational& alpha,
                                  const Rational& beta, const Rational& alpha_d, const Rational& beta_d,
                                  const HomOptions& opt = {});

}  // namespace strongpoly
