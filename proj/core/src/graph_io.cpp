#include <fstream>
#include <sstream>

#include "io_json.hpp"
#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace detail {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::int64_t int_of(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
    return j.get<std::int64_t>();
}

Rational rational_of(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const Error&) {
        }
    }
    throw ParseError("weights must be integers or strings like \"p/q\"");
}

json graph_json(const WeightedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) {
        json ed = json::array({e.u, e.v});
        if (!e.w.is_one()) {
            auto iv = e.w.is_integer() ? e.w.to_int64() : std::nullopt;
            ed.push_back(iv ? json(*iv) : json(e.w.str()));
        }
        edges.push_back(std::move(ed));
    }
    return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

namespace {

struct RawGraph {
    int n = 0;
    std::vector<WeightedEdge> edges;
};

RawGraph raw_of(const json& j) {
    if (!j.is_object() || !j.contains("n")) throw ParseError("graph JSON needs an object with \"n\"");
    std::int64_t n = int_of(j.at("n"), "n");
    if (n < 0 || n > 1000000) throw ParseError("vertex count out of range");
    RawGraph g;
    g.n = int(n);
    if (!j.contains("edges")) return g;
    if (!j.at("edges").is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& ed : j.at("edges")) {
        if (!ed.is_array() || ed.size() < 2 || ed.size() > 3) throw ParseError("an edge is [u, v] or [u, v, w]");
        std::int64_t u = int_of(ed[0], "edge endpoint"), v = int_of(ed[1], "edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
        g.edges.push_back({int(u), int(v), ed.size() == 3 ? rational_of(ed[2]) : Rational(1)});
    }
    return g;
}

}  // namespace

WeightedGraph graph_of(const json& j) {
    RawGraph r = raw_of(j);
    GraphBuilder b(r.n);
    for (auto& e : r.edges) b.add(e.u, e.v, e.w);
    return b.build();
}

}  // namespace detail

using detail::json;

WeightedGraph graph_from_json(std::string_view text) { return detail::graph_of(detail::parse_json(text)); }

std::string graph_to_json(const WeightedGraph& g) { return detail::graph_json(g).dump(); }

Multigraph multigraph_from_json(std::string_view text) {
    WeightedGraph w = detail::graph_of(detail::parse_json(text));
    for (const auto& e : w.edges())
        if (!e.w.is_integer() || e.w.sign() <= 0)
            throw ParseError("multigraph weights must be positive integers (edge multiplicities)");
    return Multigraph::from_weighted(w);
}

std::string multigraph_to_json(const Multigraph& g) { return graph_to_json(g.to_weighted()); }

std::string graph_to_dot(const WeightedGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (!e.w.is_one()) out << " [label=\"" << e.w.str() << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string poly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exp", e}, {"coef", c.str()}});
    return json{{"vars", p.vars()}, {"terms", std::move(terms)}}.dump();
}

MultiPoly poly_from_json(std::string_view text) {
    json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("vars") || !j.at("vars").is_array())
        throw ParseError("polynomial JSON needs \"vars\"");
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) {
        if (!v.is_string()) throw ParseError("variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    MultiPoly p(vars);
    if (!j.contains("terms")) return p;
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef")) throw ParseError("bad polynomial term");
        MultiPoly::Exponent e;
        for (const auto& x : t.at("exp")) {
            std::int64_t d = detail::int_of(x, "exponent");
            if (d < 0 || d > 100000) throw ParseError("exponent out of range");
            e.push_back(int(d));
        }
        if (e.size() != vars.size()) throw ParseError("exponent length must match vars");
        p.add_term(e, detail::rational_of(t.at("coef")));
    }
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace strongpoly
