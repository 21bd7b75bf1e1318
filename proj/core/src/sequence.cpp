#include "strongpoly/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

struct GenName {
    const char* name;
    FamilyKind kind;
};

constexpr GenName kGenNames[] = {
    {"complete", FamilyKind::Complete},
    {"coclique", FamilyKind::Coclique},
    {"looped-complete", FamilyKind::LoopedComplete},
    {"looped-coclique", FamilyKind::LoopedCoclique},
    {"matching", FamilyKind::Matching},
    {"bipartite", FamilyKind::CompleteBipartite},
    {"multipartite", FamilyKind::CompleteMultipartite},
    {"hypercube", FamilyKind::Hypercube},
    {"johnson", FamilyKind::Johnson},
    {"rook", FamilyKind::Rook},
    {"pow2loop", FamilyKind::Pow2Loop},
    {"windmill", FamilyKind::Windmill},
};

struct OpName {
    const char* name;
    ExprKind kind;
};

constexpr OpName kOpNames[] = {
    {"graph", ExprKind::Fixed},
    {"complement", ExprKind::Complement},
    {"looped-complement", ExprKind::LoopedComplement},
    {"reweight", ExprKind::Reweight},
    {"line", ExprKind::Line},
    {"union", ExprKind::Union},
    {"join", ExprKind::Join},
    {"product", ExprKind::Product},
    {"lex", ExprKind::Lex},
    {"compose", ExprKind::Compose},
    {"blowup", ExprKind::BlowUp},
    {"branched", ExprKind::Branched},
    {"cotree", ExprKind::CotreeBranch},
};

bool is_identifier(const std::string& a) {
    if (a.empty() || !(std::isalpha(static_cast<unsigned char>(a[0])) || a[0] == '_')) return false;
    if (a == "nil" || a == "leaf") return false;
    return std::all_of(a.begin(), a.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; });
}

bool is_int(const std::string& a) {
    std::size_t st = (!a.empty() && a[0] == '-') ? 1 : 0;
    return a.size() > st && std::all_of(a.begin() + long(st), a.end(), [](char c) { return std::isdigit(c); });
}

std::int64_t to_int(const SExp& e, const char* what) {
    if (e.is_list || !is_int(e.atom)) throw ParseError(std::string("expected an integer for ") + what);
    try {
        return std::stoll(e.atom);
    } catch (const std::exception&) {
        throw ParseError(std::string("integer out of range for ") + what);
    }
}

FamilyArg to_param(const SExp& e) {
    if (e.is_list) throw ParseError("expected a parameter, found a list");
    if (is_int(e.atom)) return to_int(e, "parameter");
    if (is_identifier(e.atom)) return e.atom;
    throw ParseError("bad parameter '" + e.atom + "'");
}

SExp param_sexp(const FamilyArg& a) {
    return SExp::make_atom(std::holds_alternative<std::string>(a) ? std::get<std::string>(a)
                                                                  : std::to_string(std::get<std::int64_t>(a)));
}

Rational to_rational(const SExp& e) {
    if (e.is_list) throw ParseError("expected a rational literal");
    try {
        return Rational::parse(e.atom);
    } catch (const Error&) {
        throw ParseError("bad rational literal '" + e.atom + "'");
    }
}

void expect_size(const SExp& e, std::size_t n) {
    if (e.items.size() != n)
        throw ParseError("'" + e.head() + "' takes " + std::to_string(n - 1) + " argument(s)");
}

WeightedGraph graph_from_sexp(const SExp& e) {
    if (e.head() != "graph" || e.items.size() < 2) throw ParseError("expected (graph N edges...)");
    std::int64_t n = to_int(e.items[1], "vertex count");
    if (n < 0 || n > 100000) throw ParseError("bad vertex count");
    GraphBuilder b{static_cast<int>(n)};
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::size_t i = 2; i < e.items.size(); ++i) {
        const SExp& ed = e.items[i];
        if (!ed.is_list || ed.items.size() < 2 || ed.items.size() > 3) throw ParseError("edge must be (i j [w])");
        std::int64_t u = to_int(ed.items[0], "edge endpoint"), v = to_int(ed.items[1], "edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) throw ParseError("repeated edge in graph literal");
        b.set(int(u), int(v), ed.items.size() == 3 ? to_rational(ed.items[2]) : Rational(1));
    }
    return b.build();
}

SExp graph_to_sexp(const WeightedGraph& g) {
    std::vector<SExp> items{SExp::make_atom("graph"), SExp::make_atom(std::to_string(g.n()))};
    for (const auto& e : g.edges()) {
        std::vector<SExp> ed{SExp::make_atom(std::to_string(e.u)), SExp::make_atom(std::to_string(e.v))};
        if (!e.w.is_one()) ed.push_back(SExp::make_atom(e.w.str()));
        items.push_back(SExp::make_list(std::move(ed)));
    }
    return SExp::make_list(std::move(items));
}

std::optional<int> parent_from(const SExp& e) {
    if (e.is_atom("nil")) return std::nullopt;
    std::int64_t p = to_int(e, "parent");
    if (p < 0 || p > 1000000) throw ParseError("bad parent index");
    return int(p);
}

SExp parent_to(const std::optional<int>& p) { return SExp::make_atom(p ? std::to_string(*p) : "nil"); }

ExprPtr parse_expr(const SExp& e);

ExprPtr parse_gen(const SExp& e, FamilyKind kind) {
    FamilyId f;
    f.kind = kind;
    std::vector<FamilyArg> args;
    switch (kind) {
    case FamilyKind::LoopedComplete:
        expect_size(e, 3);
        args.push_back(to_param(e.items[1]));
        f.loop_weight = to_rational(e.items[2]);
        break;
    case FamilyKind::Johnson: {
        expect_size(e, 4);
        args.push_back(to_param(e.items[1]));
        std::int64_t l = to_int(e.items[2], "johnson subset size");
        if (l < 0 || l > 62) throw ParseError("johnson subset size out of range");
        f.johnson_l = int(l);
        if (!e.items[3].is_list) throw ParseError("johnson intersection sizes must be a list");
        for (const auto& d : e.items[3].items) {
            std::int64_t x = to_int(d, "intersection size");
            if (x < 0 || x > 62) throw ParseError("intersection size out of range");
            f.johnson_d.push_back(int(x));
        }
        std::sort(f.johnson_d.begin(), f.johnson_d.end());
        f.johnson_d.erase(std::unique(f.johnson_d.begin(), f.johnson_d.end()), f.johnson_d.end());
        break;
    }
    default:
        expect_size(e, std::size_t(f.arity()) + 1);
        for (int i = 0; i < f.arity(); ++i) args.push_back(to_param(e.items[std::size_t(i) + 1]));
    }
    return gen(std::move(f), std::move(args));
}

ExprPtr parse_expr(const SExp& e) {
    if (!e.is_list) throw ParseError("expected an expression, found '" + e.atom + "'");
    std::string h = e.head();
    if (h.empty()) throw ParseError("expression must start with an operator name");
    for (const auto& g : kGenNames)
        if (h == g.name) return parse_gen(e, g.kind);
    const OpName* op = nullptr;
    for (const auto& o : kOpNames)
        if (h == o.name) op = &o;
    if (!op) throw ParseError("unknown operator '" + h + "'");
    switch (op->kind) {
    case ExprKind::Fixed:
        return fixed(graph_from_sexp(e));
    case ExprKind::Complement:
    case ExprKind::LoopedComplement:
    case ExprKind::Line:
        expect_size(e, 2);
        return unary(op->kind, parse_expr(e.items[1]));
    case ExprKind::Reweight:
        expect_size(e, 6);
        return reweight(parse_expr(e.items[1]), to_rational(e.items[2]), to_rational(e.items[3]),
                        to_rational(e.items[4]), to_rational(e.items[5]));
    case ExprKind::Union:
    case ExprKind::Join:
    case ExprKind::Product:
    case ExprKind::Lex:
        expect_size(e, 3);
        return binary(op->kind, parse_expr(e.items[1]), parse_expr(e.items[2]));
    case ExprKind::Compose: {
        if (e.items.size() < 2) throw ParseError("compose needs a base graph");
        std::vector<ExprPtr> orn;
        for (std::size_t i = 2; i < e.items.size(); ++i) orn.push_back(parse_expr(e.items[i]));
        return compose(graph_from_sexp(e.items[1]), std::move(orn));
    }
    case ExprKind::BlowUp: {
        if (e.items.size() < 2) throw ParseError("blowup needs a base graph");
        std::vector<FamilyArg> mults;
        for (std::size_t i = 2; i < e.items.size(); ++i) mults.push_back(to_param(e.items[i]));
        return blow_up(graph_from_sexp(e.items[1]), std::move(mults));
    }
    case ExprKind::Branched: {
        if (e.items.size() < 2 || !e.items[1].is_list) throw ParseError("branched needs a node list");
        std::vector<TreeNode> nodes;
        std::vector<FamilyArg> mults;
        for (const auto& nd : e.items[1].items) {
            if (!nd.is_list || nd.items.size() != 4 || !nd.items[1].is_list || nd.items[2].is_list)
                throw ParseError("tree node must be (PARENT (A...) LABEL MULT)");
            TreeNode t;
            t.parent = parent_from(nd.items[0]);
            for (const auto& a : nd.items[1].items) {
                std::int64_t x = to_int(a, "colour level");
                if (x < 0 || x > 1000000) throw ParseError("colour level out of range");
                t.A.push_back(int(x));
            }
            t.ornament = nd.items[2].atom;
            nodes.push_back(std::move(t));
            mults.push_back(to_param(nd.items[3]));
        }
        std::vector<std::pair<std::string, ExprPtr>> orn;
        for (std::size_t i = 2; i < e.items.size(); ++i) {
            const SExp& o = e.items[i];
            if (!o.is_list || o.items.size() != 2 || o.items[0].is_list)
                throw ParseError("ornament binding must be (LABEL expr)");
            orn.emplace_back(o.items[0].atom, parse_expr(o.items[1]));
        }
        return branched(ColouredRootedTree(std::move(nodes)), std::move(mults), std::move(orn));
    }
    case ExprKind::CotreeBranch: {
        std::vector<CotreeNode> nodes;
        std::vector<FamilyArg> mults;
        for (std::size_t i = 1; i < e.items.size(); ++i) {
            const SExp& nd = e.items[i];
            if (!nd.is_list || nd.items.size() != 3) throw ParseError("cotree node must be (PARENT LABEL MULT)");
            CotreeNode c;
            c.parent = parent_from(nd.items[0]);
            if (nd.items[1].is_atom("leaf"))
                c.label = -1;
            else if (nd.items[1].is_atom("0") || nd.items[1].is_atom("1"))
                c.label = nd.items[1].atom == "1";
            else
                throw ParseError("cotree label must be 0, 1 or leaf");
            nodes.push_back(c);
            mults.push_back(to_param(nd.items[2]));
        }
        return cotree_branched(Cotree(std::move(nodes)), std::move(mults));
    }
    default:
        break;
    }
    throw ParseError("unknown operator '" + h + "'");
}

SExp expr_to_sexp(const Expr& e) {
    std::vector<SExp> items{SExp::make_atom(op_name(e))};
    switch (e.kind) {
    case ExprKind::Gen:
        items.push_back(param_sexp(e.params.at(0)));
        if (e.family.kind == FamilyKind::LoopedComplete) items.push_back(SExp::make_atom(e.family.loop_weight.str()));
        if (e.family.kind == FamilyKind::Johnson) {
            items.push_back(SExp::make_atom(std::to_string(e.family.johnson_l)));
            std::vector<SExp> ds;
            for (int d : e.family.johnson_d) ds.push_back(SExp::make_atom(std::to_string(d)));
            items.push_back(SExp::make_list(std::move(ds)));
        }
        for (std::size_t i = 1; i < e.params.size(); ++i) items.push_back(param_sexp(e.params[i]));
        break;
    case ExprKind::Fixed:
        return graph_to_sexp(*e.graph);
    case ExprKind::Complement:
    case ExprKind::LoopedComplement:
    case ExprKind::Line:
    case ExprKind::Union:
    case ExprKind::Join:
    case ExprKind::Product:
    case ExprKind::Lex:
        for (const auto& s : e.sub) items.push_back(expr_to_sexp(*s));
        break;
    case ExprKind::Reweight:
        items.push_back(expr_to_sexp(*e.sub.at(0)));
        for (const auto& c : e.coeffs) items.push_back(SExp::make_atom(c.str()));
        break;
    case ExprKind::Compose:
        items.push_back(graph_to_sexp(*e.graph));
        for (const auto& s : e.sub) items.push_back(expr_to_sexp(*s));
        break;
    case ExprKind::BlowUp:
        items.push_back(graph_to_sexp(*e.graph));
        for (const auto& p : e.params) items.push_back(param_sexp(p));
        break;
    case ExprKind::Branched: {
        std::vector<SExp> nodes;
        for (int s = 0; s < e.tree->size(); ++s) {
            const auto& nd = e.tree->node(s);
            std::vector<SExp> as;
            for (int a : nd.A) as.push_back(SExp::make_atom(std::to_string(a)));
            nodes.push_back(SExp::make_list({parent_to(nd.parent), SExp::make_list(std::move(as)),
                                             SExp::make_atom(nd.ornament), param_sexp(e.params[s])}));
        }
        items.push_back(SExp::make_list(std::move(nodes)));
        for (const auto& [label, x] : e.ornaments)
            items.push_back(SExp::make_list({SExp::make_atom(label), expr_to_sexp(*x)}));
        break;
    }
    case ExprKind::CotreeBranch:
        for (int s = 0; s < e.cotree->size(); ++s) {
            const auto& nd = e.cotree->node(s);
            items.push_back(SExp::make_list({parent_to(nd.parent),
                                             SExp::make_atom(nd.label < 0 ? "leaf" : std::to_string(nd.label)),
                                             param_sexp(e.params[s])}));
        }
        break;
    }
    return SExp::make_list(std::move(items));
}

void collect(const Expr& e, std::vector<std::string>& out) {
    auto add = [&](const FamilyArg& a) {
        if (auto* s = std::get_if<std::string>(&a))
            if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
    };
    switch (e.kind) {
    case ExprKind::Gen:
    case ExprKind::BlowUp:
        for (const auto& p : e.params) add(p);
        break;
    case ExprKind::Branched:
        for (const auto& p : e.params) add(p);
        for (const auto& [l, x] : e.ornaments) collect(*x, out);
        break;
    case ExprKind::CotreeBranch:
        for (const auto& p : e.params) add(p);
        break;
    default:
        for (const auto& s : e.sub) collect(*s, out);
    }
}

std::int64_t resolve(const FamilyArg& a, const Binding& b) {
    if (auto* v = std::get_if<std::int64_t>(&a)) return *v;
    auto it = b.find(std::get<std::string>(a));
    if (it == b.end()) throw DomainError("unbound parameter '" + std::get<std::string>(a) + "'");
    return it->second;
}

std::vector<std::int64_t> resolve_all(const std::vector<FamilyArg>& as, const Binding& b) {
    std::vector<std::int64_t> out;
    out.reserve(as.size());
    for (const auto& a : as) out.push_back(resolve(a, b));
    return out;
}

WeightedGraph eval_node(const Expr& e, const Binding& b) {
    switch (e.kind) {
    case ExprKind::Gen: {
        auto v = resolve_all(e.params, b);
        return generate(e.family, v);
    }
    case ExprKind::Fixed:
        return *e.graph;
    case ExprKind::Complement:
        return complement(eval_node(*e.sub[0], b));
    case ExprKind::LoopedComplement:
        return looped_complement(eval_node(*e.sub[0], b));
    case ExprKind::Reweight:
        return affine_reweight(eval_node(*e.sub[0], b), e.coeffs[0], e.coeffs[1], e.coeffs[2], e.coeffs[3]);
    case ExprKind::Line:
        return line_graph(eval_node(*e.sub[0], b));
    case ExprKind::Union:
        return disjoint_union(eval_node(*e.sub[0], b), eval_node(*e.sub[1], b));
    case ExprKind::Join:
        return join(eval_node(*e.sub[0], b), eval_node(*e.sub[1], b));
    case ExprKind::Product:
        return categorical_product(eval_node(*e.sub[0], b), eval_node(*e.sub[1], b));
    case ExprKind::Lex:
        return lexicographic_product(eval_node(*e.sub[0], b), eval_node(*e.sub[1], b));
    case ExprKind::Compose: {
        OrnamentedGraph og{*e.graph, {}};
        for (const auto& s : e.sub) og.ornaments.push_back(eval_node(*s, b));
        return strongpoly::compose(og);
    }
    case ExprKind::BlowUp: {
        auto v = resolve_all(e.params, b);
        return strongpoly::blow_up(*e.graph, v);
    }
    case ExprKind::Branched: {
        auto v = resolve_all(e.params, b);
        OrnamentTable table;
        for (const auto& [label, x] : e.ornaments) table.emplace(label, eval_node(*x, b));
        return branched_composition(e.tree->with_mults(v), table);
    }
    case ExprKind::CotreeBranch: {
        auto v = resolve_all(e.params, b);
        return eval_cotree(cotree_branch(*e.cotree, v));
    }
    }
    throw DomainError("unknown expression kind");
}

bool same(const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || !(a.family == b.family) || a.params != b.params || a.coeffs != b.coeffs ||
        a.graph != b.graph || a.tree != b.tree || a.cotree != b.cotree || a.sub.size() != b.sub.size() ||
        a.ornaments.size() != b.ornaments.size())
        return false;
    for (std::size_t i = 0; i < a.sub.size(); ++i)
        if (!same(a.sub[i], b.sub[i])) return false;
    for (std::size_t i = 0; i < a.ornaments.size(); ++i)
        if (a.ornaments[i].first != b.ornaments[i].first || !same(a.ornaments[i].second, b.ornaments[i].second))
            return false;
    return true;
}

bool operator==(const SequenceExpr& a, const SequenceExpr& b) { return same(a.root_, b.root_); }

std::string op_name(const Expr& e) {
    if (e.kind == ExprKind::Gen) {
        for (const auto& g : kGenNames)
            if (g.kind == e.family.kind) return g.name;
    }
    for (const auto& o : kOpNames)
        if (o.kind == e.kind) return o.name;
    throw DomainError("unknown expression kind");
}

SequenceExpr SequenceExpr::parse(std::string_view text) { return from_sexp(parse_sexp(text)); }

SequenceExpr SequenceExpr::from_sexp(const SExp& e) { return SequenceExpr(parse_expr(e)); }

SExp SequenceExpr::to_sexp() const {
    if (!root_) throw DomainError("empty expression");
    return expr_to_sexp(*root_);
}

std::string SequenceExpr::str() const { return print_sexp(to_sexp()); }

std::vector<std::string> SequenceExpr::free_params() const {
    std::vector<std::string> out;
    if (root_) collect(*root_, out);
    return out;
}

WeightedGraph SequenceExpr::eval(const Binding& b) const {
    if (!root_) throw DomainError("empty expression");
    for (const auto& name : free_params()) {
        auto it = b.find(name);
        if (it == b.end()) throw DomainError("unbound parameter '" + name + "'");
        if (it->second < 1) throw DomainError("parameter '" + name + "' must be a positive integer");
    }
    return eval_node(*root_, b);
}

WeightedGraph SequenceExpr::eval(std::span<const std::int64_t> values) const {
    auto names = free_params();
    if (names.size() != values.size()) throw DomainError("expected one value per free parameter");
    Binding b;
    for (std::size_t i = 0; i < names.size(); ++i) b[names[i]] = values[i];
    return eval(b);
}

std::optional<Rational> tree_hom(const SequenceExpr& seq, const Multigraph& g, std::span<const std::int64_t> values,
                                 const HomOptions& opt) {
    const Expr& e = seq.root();
    if (e.kind != ExprKind::Branched && e.kind != ExprKind::CotreeBranch) return std::nullopt;
    auto names = seq.free_params();
    if (names.size() != values.size()) throw DomainError("expected one value per free parameter");
    Binding b;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (values[i] < 1) throw DomainError("parameter '" + names[i] + "' must be a positive integer");
        b[names[i]] = values[i];
    }
    auto mults = resolve_all(e.params, b);
    if (e.kind == ExprKind::CotreeBranch) return hom_cotree(g, e.cotree->with_mults(mults));
    OrnamentTable table;
    for (const auto& [label, x] : e.ornaments) table.emplace(label, eval_node(*x, b));
    return hom_branched(g, e.tree->with_mults(mults), table, opt);
}

// ---------------------------------------------------------------------------

ExprPtr gen(FamilyId f, std::vector<FamilyArg> args) {
    if (int(args.size()) != f.arity()) throw DomainError("wrong number of family parameters");
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Gen;
    e->family = std::move(f);
    e->params = std::move(args);
    return e;
}

ExprPtr fixed(WeightedGraph g) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Fixed;
    e->graph = std::move(g);
    return e;
}

ExprPtr unary(ExprKind k, ExprPtr x) {
    if (k != ExprKind::Complement && k != ExprKind::LoopedComplement && k != ExprKind::Line)
        throw DomainError("not a unary operator");
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->sub = {std::move(x)};
    return e;
}

ExprPtr reweight(ExprPtr x, Rational a, Rational b, Rational ad, Rational bd) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Reweight;
    e->sub = {std::move(x)};
    e->coeffs = {std::move(a), std::move(b), std::move(ad), std::move(bd)};
    return e;
}

ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
    if (k != ExprKind::Union && k != ExprKind::Join && k != ExprKind::Product && k != ExprKind::Lex)
        throw DomainError("not a binary operator");
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->sub = {std::move(a), std::move(b)};
    return e;
}

ExprPtr compose(WeightedGraph base, std::vector<ExprPtr> ornaments) {
    if (!base.is_simple()) throw DomainError("compose needs a simple base graph");
    if (int(ornaments.size()) != base.n()) throw DomainError("compose needs one ornament per base vertex");
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Compose;
    e->graph = std::move(base);
    e->sub = std::move(ornaments);
    return e;
}

ExprPtr blow_up(WeightedGraph base, std::vector<FamilyArg> mults) {
    if (!base.is_zero_one() && !base.is_simple()) throw DomainError("blowup needs 0/1 weights");
    if (int(mults.size()) != base.n()) throw DomainError("blowup needs one multiplicity per base vertex");
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::BlowUp;
    e->graph = std::move(base);
    e->params = std::move(mults);
    return e;
}

ExprPtr branched(ColouredRootedTree tree, std::vector<FamilyArg> mults,
                 std::vector<std::pair<std::string, ExprPtr>> ornaments) {
    if (int(mults.size()) != tree.size()) throw DomainError("branched needs one multiplicity per node");
    std::sort(ornaments.begin(), ornaments.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < ornaments.size(); ++i)
        if (ornaments[i].first == ornaments[i - 1].first)
            throw DomainError("ornament '" + ornaments[i].first + "' bound twice");
    for (const auto& nd : tree.nodes()) {
        bool found = std::any_of(ornaments.begin(), ornaments.end(),
                                 [&](const auto& o) { return o.first == nd.ornament; });
        if (!found) throw DomainError("ornament '" + nd.ornament + "' has no binding");
    }
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Branched;
    e->tree = tree.with_unit_mults();
    e->params = std::move(mults);
    e->ornaments = std::move(ornaments);
    return e;
}

ExprPtr cotree_branched(Cotree t, std::vector<FamilyArg> mults) {
    if (int(mults.size()) != t.size()) throw DomainError("cotree needs one multiplicity per node");
    std::vector<std::int64_t> ones(t.size(), 1);
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::CotreeBranch;
    e->cotree = t.with_mults(ones);
    e->params = std::move(mults);
    return e;
}

}  // namespace strongpoly
