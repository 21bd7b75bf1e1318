#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongpoly/multipoly.hpp"

namespace strongpoly {

using Point = std::vector<std::int64_t>;

struct SampleGrid {
    std::vector<Point> points;
    std::vector<Rational> values;
};

/// Tensor grid {1..d+1}^h in mixed-radix order (first coordinate fastest).
std::vector<Point> full_grid(std::size_t h, int d);

/// Interpolating polynomial with per-variable degree <= d from samples on the
/// full grid {1..d+1}^h (any order; extra points are ignored). Iterated Newton
/// divided differences, exact. Throws DomainError when a grid point is missing.
MultiPoly fit_grid(const SampleGrid& samples, int d, std::vector<std::string> vars);

/// Least-squares-free exact fit over all monomials with per-variable degree
/// <= d, from arbitrary distinct points. Returns nullopt when the samples are
/// not matched exactly by any such polynomial; throws DomainError if the
/// points do not determine the polynomial.
std::optional<MultiPoly> fit_monomials(const SampleGrid& samples, int d, std::vector<std::string> vars);

/// Basis functions k^a * 2^(k*b) of one integer variable k.
struct CurveBasisSpec {
    std::vector<std::pair<int, int>> terms;  // (a, b)

    /// All (a, b) with 0 <= a <= max_a, 0 <= b <= max_b.
    static CurveBasisSpec rectangle(int max_a, int max_b);
    Rational evaluate_term(std::size_t i, std::int64_t k) const;
    Rational evaluate(const std::vector<Rational>& coef, std::int64_t k) const;
    std::string str(const std::vector<Rational>& coef) const;
};

/// Exact solve for coefficients reproducing every sample. nullopt when no
/// combination of the basis matches all samples; DomainError when the
/// samples leave the coefficients undetermined.
std::optional<std::vector<Rational>> fit_curve_basis(const std::vector<std::pair<std::int64_t, Rational>>& samples,
                                                     const CurveBasisSpec& spec);

}  // namespace strongpoly
