#include "io_json.hpp"
#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

using detail::json;

json param_json(const FamilyArg& a) {
    if (auto* s = std::get_if<std::string>(&a)) return *s;
    return std::get<std::int64_t>(a);
}

std::vector<FamilyArg> params_of(const json& j) {
    if (!j.is_array()) throw ParseError("\"params\" must be an array");
    std::vector<FamilyArg> out;
    for (const auto& p : j) {
        if (p.is_string())
            out.push_back(p.get<std::string>());
        else
            out.push_back(detail::int_of(p, "parameter"));
    }
    return out;
}

json to_json(const Expr& e) {
    json j{{"op", op_name(e)}};
    json params = json::array();
    for (const auto& p : e.params) params.push_back(param_json(p));
    json args = json::array();
    for (const auto& s : e.sub) args.push_back(to_json(*s));
    switch (e.kind) {
    case ExprKind::Gen:
        j["params"] = std::move(params);
        if (e.family.kind == FamilyKind::LoopedComplete) j["loop"] = e.family.loop_weight.str();
        if (e.family.kind == FamilyKind::Johnson) {
            j["l"] = e.family.johnson_l;
            j["D"] = e.family.johnson_d;
        }
        break;
    case ExprKind::Fixed:
        j["graph"] = detail::graph_json(*e.graph);
        break;
    case ExprKind::Reweight: {
        j["args"] = std::move(args);
        json c = json::array();
        for (const auto& x : e.coeffs) c.push_back(x.str());
        j["coeffs"] = std::move(c);
        break;
    }
    case ExprKind::Compose:
        j["base"] = detail::graph_json(*e.graph);
        j["args"] = std::move(args);
        break;
    case ExprKind::BlowUp:
        j["base"] = detail::graph_json(*e.graph);
        j["params"] = std::move(params);
        break;
    case ExprKind::Branched: {
        j["tree"] = detail::tree_json(*e.tree, false);
        j["params"] = std::move(params);
        json orn = json::object();
        for (const auto& [label, x] : e.ornaments) orn[label] = to_json(*x);
        j["ornaments"] = std::move(orn);
        break;
    }
    case ExprKind::CotreeBranch:
        j["cotree"] = detail::cotree_json(*e.cotree, false);
        j["params"] = std::move(params);
        break;
    default:
        j["args"] = std::move(args);
    }
    return j;
}

ExprPtr of_json(const json& j);

std::vector<ExprPtr> args_of(const json& j, std::size_t expected) {
    if (!j.contains("args") || !j.at("args").is_array()) throw ParseError("expression needs \"args\"");
    std::vector<ExprPtr> out;
    for (const auto& a : j.at("args")) out.push_back(of_json(a));
    if (expected && out.size() != expected) throw ParseError("wrong number of arguments");
    return out;
}

const json& field(const json& j, const char* name) {
    if (!j.contains(name)) throw ParseError(std::string("expression needs \"") + name + "\"");
    return j.at(name);
}

ExprPtr of_json(const json& j) {
    if (!j.is_object() || !j.contains("op") || !j.at("op").is_string())
        throw ParseError("expression JSON needs an \"op\" string");
    std::string op = j.at("op").get<std::string>();
    // Generators and unary/binary operators share the s-expression vocabulary.
    static const std::map<std::string, ExprKind> ops{
        {"graph", ExprKind::Fixed},       {"complement", ExprKind::Complement},
        {"looped-complement", ExprKind::LoopedComplement},
        {"reweight", ExprKind::Reweight}, {"line", ExprKind::Line},
        {"union", ExprKind::Union},       {"join", ExprKind::Join},
        {"product", ExprKind::Product},   {"lex", ExprKind::Lex},
        {"compose", ExprKind::Compose},   {"blowup", ExprKind::BlowUp},
        {"branched", ExprKind::Branched}, {"cotree", ExprKind::CotreeBranch},
    };
    auto it = ops.find(op);
    if (it == ops.end()) {
        // generator: rebuild through the s-expression reader so both syntaxes agree
        std::vector<SExp> items{SExp::make_atom(op)};
        for (const auto& p : params_of(field(j, "params"))) {
            if (auto* s = std::get_if<std::string>(&p))
                items.push_back(SExp::make_atom(*s));
            else
                items.push_back(SExp::make_atom(std::to_string(std::get<std::int64_t>(p))));
            if (items.size() == 2 && op == "looped-complete") {
                const json& l = field(j, "loop");
                items.push_back(SExp::make_atom(l.is_string() ? l.get<std::string>() : l.dump()));
            }
            if (items.size() == 2 && op == "johnson") {
                items.push_back(SExp::make_atom(std::to_string(detail::int_of(field(j, "l"), "l"))));
                std::vector<SExp> ds;
                for (const auto& d : field(j, "D")) ds.push_back(SExp::make_atom(std::to_string(detail::int_of(d, "D"))));
                items.push_back(SExp::make_list(std::move(ds)));
            }
        }
        return SequenceExpr::from_sexp(SExp::make_list(std::move(items))).ptr();
    }
    switch (it->second) {
    case ExprKind::Fixed:
        return fixed(detail::graph_of(field(j, "graph")));
    case ExprKind::Complement:
    case ExprKind::LoopedComplement:
    case ExprKind::Line:
        return unary(it->second, args_of(j, 1)[0]);
    case ExprKind::Reweight: {
        const json& c = field(j, "coeffs");
        if (!c.is_array() || c.size() != 4) throw ParseError("reweight needs four coefficients");
        return reweight(args_of(j, 1)[0], detail::rational_of(c[0]), detail::rational_of(c[1]),
                        detail::rational_of(c[2]), detail::rational_of(c[3]));
    }
    case ExprKind::Union:
    case ExprKind::Join:
    case ExprKind::Product:
    case ExprKind::Lex: {
        auto a = args_of(j, 2);
        return binary(it->second, a[0], a[1]);
    }
    case ExprKind::Compose:
        return compose(detail::graph_of(field(j, "base")), args_of(j, 0));
    case ExprKind::BlowUp:
        return blow_up(detail::graph_of(field(j, "base")), params_of(field(j, "params")));
    case ExprKind::Branched: {
        std::vector<std::pair<std::string, ExprPtr>> orn;
        const json& o = field(j, "ornaments");
        if (!o.is_object()) throw ParseError("\"ornaments\" must be an object");
        for (const auto& [label, x] : o.items()) orn.emplace_back(label, of_json(x));
        return branched(detail::tree_of(field(j, "tree")), params_of(field(j, "params")), std::move(orn));
    }
    case ExprKind::CotreeBranch:
        return cotree_branched(detail::cotree_of(field(j, "cotree")), params_of(field(j, "params")));
    default:
        break;
    }
    throw ParseError("unknown operator '" + op + "'");
}

}  // namespace

std::string expr_to_json(const SequenceExpr& e) { return to_json(e.root()).dump(); }

SequenceExpr expr_from_json(std::string_view text) { return SequenceExpr(of_json(detail::parse_json(text))); }

}  // namespace strongpoly
