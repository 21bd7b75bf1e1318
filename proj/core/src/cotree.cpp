#include "strongpoly/cotree.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

constexpr std::size_t kMaxCotreeNodes = 2'000'000;

std::vector<CotreeNode> single_leaf() { return {CotreeNode{}}; }

}  // namespace

Cotree::Cotree() : Cotree(single_leaf()) {}

Cotree::Cotree(std::vector<CotreeNode> nodes) : nodes_(std::move(nodes)) {
    int n = int(nodes_.size());
    if (n == 0) throw DomainError("a cotree needs at least one node");
    root_ = -1;
    children_.assign(n, {});
    for (int s = 0; s < n; ++s) {
        const auto& nd = nodes_[s];
        if (nd.label < -1 || nd.label > 1) throw DomainError("cotree labels are 0, 1 or leaf");
        if (nd.mult < 1) throw DomainError("multiplicities must be positive");
        if (!nd.parent) {
            if (root_ >= 0) throw DomainError("cotree has more than one root");
            root_ = s;
            continue;
        }
        if (*nd.parent < 0 || *nd.parent >= n || *nd.parent == s) throw DomainError("bad parent index");
        children_[*nd.parent].push_back(s);
    }
    if (root_ < 0) throw DomainError("cotree has no root");
    std::vector<int> stack{root_};
    int seen = 0;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        ++seen;
        for (int c : children_[s]) stack.push_back(c);
    }
    if (seen != n) throw DomainError("parent structure has a cycle");
    for (int s = 0; s < n; ++s) {
        if (nodes_[s].label < 0 && !children_[s].empty()) throw DomainError("leaves cannot have children");
        if (nodes_[s].label >= 0 && children_[s].empty()) throw DomainError("internal cotree node without children");
    }
}

std::vector<int> Cotree::preorder() const {
    std::vector<int> out, stack{root_};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (auto it = children_[x].rbegin(); it != children_[x].rend(); ++it) stack.push_back(*it);
    }
    return out;
}

int Cotree::leaf_count() const {
    return int(std::count_if(nodes_.begin(), nodes_.end(), [](const CotreeNode& c) { return c.label < 0; }));
}

bool Cotree::unit_mults() const {
    return std::all_of(nodes_.begin(), nodes_.end(), [](const CotreeNode& c) { return c.mult == 1; });
}

Cotree Cotree::with_mults(std::span<const std::int64_t> mults) const {
    if (int(mults.size()) != size()) throw DomainError("one multiplicity per node expected");
    auto nodes = nodes_;
    for (int s = 0; s < size(); ++s) nodes[s].mult = mults[s];
    return Cotree(std::move(nodes));
}

WeightedGraph eval_cotree(const Cotree& t) {
    if (!t.unit_mults()) throw DomainError("evaluating a cotree needs unit multiplicities");
    std::vector<int> leaf_id(t.size(), -1);
    int count = 0;
    for (int s : t.preorder())
        if (t.is_leaf(s)) leaf_id[s] = count++;
    GraphBuilder b(count);
    std::function<std::vector<int>(int)> rec = [&](int s) -> std::vector<int> {
        if (t.is_leaf(s)) return {leaf_id[s]};
        std::vector<int> all;
        for (int c : t.children(s)) {
            auto part = rec(c);
            if (t.node(s).label == 1)
                for (int u : all)
                    for (int v : part) b.set(u, v, 1);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    };
    rec(t.root());
    return b.build();
}

Cotree cotree_branch(const Cotree& t) {
    if (t.node(t.root()).mult != 1) throw DomainError("cannot branch at the root");
    std::size_t total = 0;
    std::vector<std::size_t> copies(t.size(), 0);
    for (int s : t.preorder()) {
        const auto& nd = t.node(s);
        copies[s] = nd.parent ? copies[*nd.parent] * std::size_t(nd.mult) : 1;
        total += copies[s];
        if (copies[s] > kMaxCotreeNodes || total > kMaxCotreeNodes) throw ResourceError("branched cotree too large");
    }
    std::vector<CotreeNode> nodes;
    nodes.reserve(total);
    std::function<void(int, std::optional<int>)> build = [&](int s, std::optional<int> parent) {
        for (std::int64_t c = 0; c < t.node(s).mult; ++c) {
            int id = int(nodes.size());
            nodes.push_back(CotreeNode{parent, t.node(s).label, 1});
            for (int ch : t.children(s)) build(ch, id);
        }
    };
    build(t.root(), std::nullopt);
    return Cotree(std::move(nodes));
}

Cotree cotree_branch(const Cotree& t, std::span<const std::int64_t> k) { return cotree_branch(t.with_mults(k)); }

Cotree cotree_complement(const Cotree& t) {
    auto nodes = t.nodes();
    for (auto& nd : nodes)
        if (nd.label >= 0) nd.label = 1 - nd.label;
    return Cotree(std::move(nodes));
}

namespace {

struct Shape {
    int label = -1;
    std::int64_t mult = 1;
    std::vector<Shape> children;
};

Shape to_shape(const Cotree& t, int s) {
    Shape out{t.node(s).label, t.node(s).mult, {}};
    for (int c : t.children(s)) out.children.push_back(to_shape(t, c));
    return out;
}

void emit(const Shape& sh, std::optional<int> parent, std::vector<CotreeNode>& nodes) {
    int id = int(nodes.size());
    nodes.push_back(CotreeNode{parent, sh.label, sh.mult});
    for (const auto& c : sh.children) emit(c, id, nodes);
}

Shape normal(const Shape& sh) {
    if (sh.label < 0) return sh;
    Shape out{sh.label, sh.mult, {}};
    for (const auto& c : sh.children) {
        Shape n = normal(c);
        if (n.label == sh.label) {
            for (auto& g : n.children) out.children.push_back(std::move(g));
        } else {
            out.children.push_back(std::move(n));
        }
    }
    if (out.children.size() == 1) {
        Shape only = std::move(out.children.front());
        only.mult = sh.mult;
        return only;
    }
    return out;
}

std::string key(const Shape& sh, bool own_mult) {
    std::vector<std::string> kids;
    for (const auto& c : sh.children) kids.push_back(key(c, true));
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + (sh.label < 0 ? std::string("L") : std::to_string(sh.label));
    if (own_mult) out += ";" + std::to_string(sh.mult);
    out += ":";
    for (const auto& k : kids) out += k;
    return out + ")";
}

// Merge sibling subtrees that agree up to their own multiplicity.
Shape collapse(const Shape& sh) {
    Shape out{sh.label, sh.mult, {}};
    std::map<std::string, std::size_t> seen;
    for (const auto& c : sh.children) {
        Shape r = collapse(c);
        auto [it, fresh] = seen.emplace(key(r, false), out.children.size());
        if (fresh)
            out.children.push_back(std::move(r));
        else
            out.children[it->second].mult += r.mult;
    }
    std::sort(out.children.begin(), out.children.end(),
              [](const Shape& a, const Shape& b) { return key(a, true) < key(b, true); });
    return out;
}

}  // namespace

Cotree normalize(const Cotree& t) {
    if (!t.unit_mults()) throw DomainError("normalize needs unit multiplicities");
    std::vector<CotreeNode> nodes;
    emit(normal(to_shape(t, t.root())), std::nullopt, nodes);
    return Cotree(std::move(nodes));
}

std::string canonical_string(const Cotree& t) { return key(to_shape(t, t.root()), true); }

std::optional<Cotree> cograph_cotree(const WeightedGraph& h) {
    if (!h.is_simple()) throw DomainError("cographs are simple graphs");
    if (h.n() == 0) throw DomainError("empty graph has no cotree");
    int n = h.n();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : h.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

    // components of the graph (want = 1) or of its complement (want = 0) on s
    auto split = [&](const std::vector<int>& s, char want) {
        std::vector<int> comp(s.size(), -1);
        std::vector<std::vector<int>> parts;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (comp[i] >= 0) continue;
            int c = int(parts.size());
            parts.push_back({});
            std::vector<std::size_t> stack{i};
            comp[i] = c;
            while (!stack.empty()) {
                std::size_t x = stack.back();
                stack.pop_back();
                parts[c].push_back(s[x]);
                for (std::size_t y = 0; y < s.size(); ++y)
                    if (comp[y] < 0 && y != x && adj[s[x]][s[y]] == want) {
                        comp[y] = c;
                        stack.push_back(y);
                    }
            }
        }
        return parts;
    };

    bool ok = true;
    std::function<Shape(const std::vector<int>&)> rec = [&](const std::vector<int>& s) -> Shape {
        if (s.size() == 1) return Shape{};
        auto parts = split(s, 1);
        int label = 0;
        if (parts.size() == 1) {
            parts = split(s, 0);
            label = 1;
            if (parts.size() == 1) {
                ok = false;
                return Shape{};
            }
        }
        Shape out{label, 1, {}};
        for (const auto& p : parts) {
            out.children.push_back(rec(p));
            if (!ok) break;
        }
        return out;
    };
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    Shape sh = rec(all);
    if (!ok) return std::nullopt;
    std::vector<CotreeNode> nodes;
    emit(sh, std::nullopt, nodes);
    return Cotree(std::move(nodes));
}

bool is_cograph(const WeightedGraph& h) { return cograph_cotree(h).has_value(); }

Cotree gamma_witness(const WeightedGraph& h) {
    if (h.n() > kGammaCap) throw ResourceError("gamma is limited to 16 vertices");
    auto t = cograph_cotree(h);
    if (!t) throw DomainError("graph is not a cograph");
    std::vector<CotreeNode> nodes;
    emit(collapse(to_shape(*t, t->root())), std::nullopt, nodes);
    return Cotree(std::move(nodes));
}

int gamma(const WeightedGraph& h) { return gamma_witness(h).size(); }

}  // namespace strongpoly
