#pragma once

#include <string>
#include <string_view>

#include "strongpoly/coloured_tree.hpp"
#include "strongpoly/cotree.hpp"
#include "strongpoly/graph.hpp"
#include "strongpoly/multipoly.hpp"
#include "strongpoly/sequence.hpp"

namespace strongpoly {

// All writers produce compact single-line JSON with a fixed key order.

/// {"n":3,"edges":[[0,1],[1,2,"1/2"]]}; the weight is optional and defaults to 1.
WeightedGraph graph_from_json(std::string_view text);
std::string graph_to_json(const WeightedGraph& g);
/// Same format; an integer weight w >= 1 stands for w parallel edges, repeated entries add up.
Multigraph multigraph_from_json(std::string_view text);
std::string multigraph_to_json(const Multigraph& g);
std::string graph_to_dot(const WeightedGraph& g, const std::string& name = "H");

/// {"vars":["j","k"],"terms":[{"exp":[1,1],"coef":"2"}]}
std::string poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(std::string_view text);

/// {"nodes":[{"parent":null,"A":[],"orn":"K1","mult":1},...]}
std::string tree_to_json(const ColouredRootedTree& t);
ColouredRootedTree tree_from_json(std::string_view text);
std::string tree_to_dot(const ColouredRootedTree& t);

/// {"nodes":[{"parent":null,"label":1,"mult":1},{"parent":0,"label":null,"mult":3}]}
std::string cotree_to_json(const Cotree& t);
Cotree cotree_from_json(std::string_view text);
std::string cotree_to_dot(const Cotree& t);

/// JSON mirror of the s-expression AST, e.g. {"op":"join","args":[{"op":"coclique","params":["j"]},...]}.
std::string expr_to_json(const SequenceExpr& e);
SequenceExpr expr_from_json(std::string_view text);

/// Whole file as a string; throws Error when unreadable.
std::string read_file(const std::string& path);

}  // namespace strongpoly
