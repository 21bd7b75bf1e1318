#include <sstream>

#include "io_json.hpp"
#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace detail {

namespace {

json parent_json(const std::optional<int>& p) { return p ? json(*p) : json(nullptr); }

std::optional<int> parent_of(const json& j) {
    if (j.is_null()) return std::nullopt;
    std::int64_t p = int_of(j, "parent");
    if (p < 0 || p > 10000000) throw ParseError("parent index out of range");
    return int(p);
}

const json& nodes_of(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.at("nodes").is_array())
        throw ParseError("tree JSON needs a \"nodes\" array");
    return j.at("nodes");
}

std::int64_t mult_of(const json& nd) {
    if (!nd.contains("mult")) return 1;
    return int_of(nd.at("mult"), "mult");
}

}  // namespace

json tree_json(const ColouredRootedTree& t, bool mults) {
    json nodes = json::array();
    for (const auto& nd : t.nodes()) {
        json x{{"parent", parent_json(nd.parent)}, {"A", nd.A}, {"orn", nd.ornament}};
        if (mults) x["mult"] = nd.mult;
        nodes.push_back(std::move(x));
    }
    return json{{"nodes", std::move(nodes)}};
}

ColouredRootedTree tree_of(const json& j) {
    std::vector<TreeNode> nodes;
    for (const auto& nd : nodes_of(j)) {
        if (!nd.is_object()) throw ParseError("tree node must be an object");
        TreeNode t;
        t.parent = parent_of(nd.value("parent", json(nullptr)));
        if (nd.contains("A")) {
            if (!nd.at("A").is_array()) throw ParseError("\"A\" must be an array");
            for (const auto& a : nd.at("A")) {
                std::int64_t x = int_of(a, "A");
                if (x < 0 || x > 10000000) throw ParseError("colour level out of range");
                t.A.push_back(int(x));
            }
        }
        if (nd.contains("orn")) {
            if (!nd.at("orn").is_string()) throw ParseError("\"orn\" must be a string");
            t.ornament = nd.at("orn").get<std::string>();
        }
        t.mult = mult_of(nd);
        nodes.push_back(std::move(t));
    }
    return ColouredRootedTree(std::move(nodes));
}

json cotree_json(const Cotree& t, bool mults) {
    json nodes = json::array();
    for (const auto& nd : t.nodes()) {
        json x{{"parent", parent_json(nd.parent)}, {"label", nd.label < 0 ? json(nullptr) : json(nd.label)}};
        if (mults) x["mult"] = nd.mult;
        nodes.push_back(std::move(x));
    }
    return json{{"nodes", std::move(nodes)}};
}

Cotree cotree_of(const json& j) {
    std::vector<CotreeNode> nodes;
    for (const auto& nd : nodes_of(j)) {
        if (!nd.is_object()) throw ParseError("cotree node must be an object");
        CotreeNode c;
        c.parent = parent_of(nd.value("parent", json(nullptr)));
        json label = nd.value("label", json(nullptr));
        if (label.is_null() || label == "leaf") {
            c.label = -1;
        } else {
            std::int64_t l = int_of(label, "label");
            if (l != 0 && l != 1) throw ParseError("cotree labels are 0, 1 or null");
            c.label = int(l);
        }
        c.mult = mult_of(nd);
        nodes.push_back(c);
    }
    return Cotree(std::move(nodes));
}

}  // namespace detail

std::string tree_to_json(const ColouredRootedTree& t) { return detail::tree_json(t).dump(); }

ColouredRootedTree tree_from_json(std::string_view text) { return detail::tree_of(detail::parse_json(text)); }

std::string tree_to_dot(const ColouredRootedTree& t) {
    std::ostringstream out;
    out << "digraph T {\n";
    for (int s = 0; s < t.size(); ++s) {
        const auto& nd = t.node(s);
        out << "  " << s << " [label=\"{";
        for (std::size_t i = 0; i < nd.A.size(); ++i) out << (i ? "," : "") << nd.A[i];
        out << "} " << nd.ornament;
        if (nd.mult != 1) out << " x" << nd.mult;
        out << "\"];\n";
    }
    for (int s = 0; s < t.size(); ++s)
        if (t.node(s).parent) out << "  " << *t.node(s).parent << " -> " << s << ";\n";
    out << "}\n";
    return out.str();
}

std::string cotree_to_json(const Cotree& t) { return detail::cotree_json(t).dump(); }

Cotree cotree_from_json(std::string_view text) { return detail::cotree_of(detail::parse_json(text)); }

std::string cotree_to_dot(const Cotree& t) {
    std::ostringstream out;
    out << "digraph C {\n";
    for (int s = 0; s < t.size(); ++s) {
        const auto& nd = t.node(s);
        out << "  " << s << " [label=\"" << (nd.label < 0 ? std::string("leaf") : std::to_string(nd.label));
        if (nd.mult != 1) out << " x" << nd.mult;
        out << "\"];\n";
    }
    for (int s = 0; s < t.size(); ++s)
        if (t.node(s).parent) out << "  " << *t.node(s).parent << " -> " << s << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace strongpoly
