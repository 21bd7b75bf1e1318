#pragma once

#include "strongpoly/graph.hpp"
#include "strongpoly/hom.hpp"
#include "strongpoly/multipoly.hpp"

namespace strongpoly {

/// Chromatic polynomial in variable "k" by deletion-contraction. Loops give
/// the zero polynomial; parallel edges count once. |E| <= 20.
MultiPoly chromatic_poly(const Multigraph& g);

/// Tutte polynomial in variables "x", "y". |E| <= 16.
MultiPoly tutte_poly(const Multigraph& g);

/// k^c(G) (l-1)^r(G) T(G; (l-1+k)/(l-1), l). Requires l != 1.
Rational tutte_hom_formula(const Multigraph& g, std::int64_t k, const Rational& l);

/// Nowhere-zero Z_k flow count from the Tutte polynomial:
/// F(G;k) = (-1)^{|E|-|V|+c(G)} T(G; 0, 1-k).
Rational flow_polynomial_value(const Multigraph& g, std::int64_t k);

/// hom(G, K_k with loops 1-k) == (-1)^|E| k^|V| F(G;k).
bool flow_count_check(const Multigraph& g, std::int64_t k, const HomOptions& opt = {});

}  // namespace strongpoly
