#pragma once

#include <vector>

#include "strongpoly/rational.hpp"

namespace strongpoly {

enum class SolveStatus { Unique, Singular, Inconsistent };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> x;  // filled when Unique
};

/// Exact Gaussian elimination on an m x n system (m >= n allowed). Unique
/// means full column rank and every equation satisfied.
SolveResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace strongpoly
