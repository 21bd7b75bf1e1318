#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strongpoly/coloured_tree.hpp"
#include "strongpoly/cotree.hpp"
#include "strongpoly/families.hpp"
#include "strongpoly/graph.hpp"
#include "strongpoly/sexpr.hpp"

namespace strongpoly {

enum class ExprKind {
    Gen,
    Fixed,
    Complement,
    LoopedComplement,
    Reweight,
    Line,
    Union,
    Join,
    Product,  // categorical
    Lex,
    Compose,
    BlowUp,
    Branched,
    CotreeBranch,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Parameters are names or positive integer literals (FamilyArg).
struct Expr {
    ExprKind kind = ExprKind::Gen;
    FamilyId family;                  // Gen
    std::vector<FamilyArg> params;    // Gen args; BlowUp/Branched/CotreeBranch multiplicities
    std::vector<ExprPtr> sub;         // operands; Compose ornaments, one per base vertex
    std::array<Rational, 4> coeffs;   // Reweight: alpha, beta, alpha', beta'
    std::optional<WeightedGraph> graph;  // Fixed graph, Compose/BlowUp base
    std::optional<ColouredRootedTree> tree;  // Branched (multiplicities taken from params)
    std::vector<std::pair<std::string, ExprPtr>> ornaments;  // Branched, sorted by label
    std::optional<Cotree> cotree;     // CotreeBranch

    friend bool operator==(const Expr& a, const Expr& b);
};

using Binding = std::map<std::string, std::int64_t>;

class SequenceExpr {
public:
    SequenceExpr() = default;
    explicit SequenceExpr(ExprPtr root) : root_(std::move(root)) {}

    static SequenceExpr parse(std::string_view text);
    static SequenceExpr from_sexp(const SExp& e);
    SExp to_sexp() const;
    std::string str() const;

    const Expr& root() const { return *root_; }
    ExprPtr ptr() const { return root_; }
    /// Names in first-occurrence order; shared names are one variable.
    std::vector<std::string> free_params() const;

    WeightedGraph eval(const Binding& b) const;
    /// Values in free_params() order.
    WeightedGraph eval(std::span<const std::int64_t> values) const;

    friend bool operator==(const SequenceExpr& a, const SequenceExpr& b);

private:
    ExprPtr root_;
};

/// hom(G, seq.eval(values)) evaluated on the tree when the root is Branched or
/// CotreeBranch (see hom_branched, hom_cotree); nullopt for every other root.
std::optional<Rational> tree_hom(const SequenceExpr& seq, const Multigraph& g, std::span<const std::int64_t> values,
                                 const HomOptions& opt = {});

// Builders.
ExprPtr gen(FamilyId f, std::vector<FamilyArg> args);
ExprPtr fixed(WeightedGraph g);
ExprPtr unary(ExprKind k, ExprPtr e);
ExprPtr reweight(ExprPtr e, Rational a, Rational b, Rational ad, Rational bd);
ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b);
ExprPtr compose(WeightedGraph base, std::vector<ExprPtr> ornaments);
ExprPtr blow_up(WeightedGraph base, std::vector<FamilyArg> mults);
ExprPtr branched(ColouredRootedTree tree, std::vector<FamilyArg> mults,
                 std::vector<std::pair<std::string, ExprPtr>> ornaments);
ExprPtr cotree_branched(Cotree t, std::vector<FamilyArg> mults);

/// S-expression operator name of a kind ("complete", "join", ...); Gen uses the family name.
std::string op_name(const Expr& e);

}  // namespace strongpoly
