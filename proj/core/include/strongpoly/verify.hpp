#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strongpoly/graph.hpp"
#include "strongpoly/hom.hpp"
#include "strongpoly/interpolation.hpp"
#include "strongpoly/multipoly.hpp"
#include "strongpoly/sequence.hpp"

namespace strongpoly {

enum class FitStatus { Consistent, Inconsistent };

std::string to_string(FitStatus s);

struct FitWitness {
    Point point;
    Rational predicted;
    Rational observed;
};

struct SampleRow {
    Point point;
    Rational hom;
    Rational predicted;
    bool validation = false;
    bool match() const { return hom == predicted; }
};

/// Empirical certificate: Consistent means the fitted polynomial matched every
/// validation point, not that the sequence is proven strongly polynomial.
struct FitVerdict {
    FitStatus status = FitStatus::Consistent;
    std::optional<MultiPoly> poly;
    std::optional<FitWitness> witness;
    int degree = 0;
    bool sparse = false;
    std::vector<SampleRow> rows;

    bool consistent() const { return status == FitStatus::Consistent; }
};

struct VerifyOptions {
    /// Per-variable degree bound; default |V(G)| times the vertex-count degree of the sequence.
    std::optional<int> degree;
    std::vector<int> offsets{1, 2};
    HomOptions hom;
    std::uint64_t seed = 0;
    /// Above this many parameters the fit samples random points instead of a full grid.
    std::size_t full_grid_limit = 4;
    /// Branched and cotree sequences: take hom from the tree (tree_hom) instead of building H_k.
    bool tree_hom = true;
};

/// Graph of the sequence at a parameter tuple.
using Evaluator = std::function<WeightedGraph(std::span<const std::int64_t>)>;

/// Full-grid fit on {1..d+1}^h, then exact comparison at grid-exterior validation points.
FitVerdict verify_strongly_polynomial(const Evaluator& seq, const std::vector<std::string>& params,
                                      const Multigraph& g, const VerifyOptions& opt);
FitVerdict verify_strongly_polynomial(const SequenceExpr& seq, const Multigraph& g, const VerifyOptions& opt = {});

/// Same verdicts as one call per graph, but each parameter tuple is evaluated
/// and compiled once and shared by all graphs. `vertex_degree` is the
/// per-variable degree of |V(H_k)| used for default degree bounds.
std::vector<FitVerdict> verify_batch(const Evaluator& seq, const std::vector<std::string>& params,
                                     const std::vector<Multigraph>& gs, const VerifyOptions& opt,
                                     int vertex_degree = 1);
std::vector<FitVerdict> verify_batch(const SequenceExpr& seq, const std::vector<Multigraph>& gs,
                                     const VerifyOptions& opt = {});

/// Upper bound on the degree of |V(H_k)| in any single parameter (0 without parameters).
int vertex_count_degree(const SequenceExpr& seq);

/// Validation points for degree d: per offset, the diagonal point and one
/// point per parameter pushed outside the grid in that coordinate.
std::vector<Point> validation_points(std::size_t h, int d, const std::vector<int>& offsets);

/// CSV with columns params..., hom, predicted, match.
std::string verdict_csv(const FitVerdict& v, const std::vector<std::string>& params);

}  // namespace strongpoly
