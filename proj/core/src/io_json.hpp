#pragma once

// JSON-level helpers shared by the io sources (not installed).

#include <json.hpp>

#include "strongpoly/io.hpp"

namespace strongpoly::detail {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text);

json graph_json(const WeightedGraph& g);
WeightedGraph graph_of(const json& j);
json tree_json(const ColouredRootedTree& t, bool mults = true);
ColouredRootedTree tree_of(const json& j);
json cotree_json(const Cotree& t, bool mults = true);
Cotree cotree_of(const json& j);

Rational rational_of(const json& j);
std::int64_t int_of(const json& j, const char* what);

}  // namespace strongpoly::detail
