#include "strongpoly/coloured_tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

constexpr std::size_t kMaxBranchedNodes = 2'000'000;

std::vector<TreeNode> single_root() {
    return {TreeNode{}};
}

}  // namespace

ColouredRootedTree::ColouredRootedTree() : ColouredRootedTree(single_root()) {}

ColouredRootedTree::ColouredRootedTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {
    int n = int(nodes_.size());
    if (n == 0) throw DomainError("a tree needs at least one node");
    root_ = -1;
    children_.assign(n, {});
    for (int s = 0; s < n; ++s) {
        const auto& nd = nodes_[s];
        if (!nd.parent) {
            if (root_ >= 0) throw DomainError("tree has more than one root");
            root_ = s;
            continue;
        }
        if (*nd.parent < 0 || *nd.parent >= n || *nd.parent == s) throw DomainError("bad parent index");
        children_[*nd.parent].push_back(s);
    }
    if (root_ < 0) throw DomainError("tree has no root");

    level_.assign(n, -1);
    level_[root_] = 0;
    std::vector<int> stack{root_};
    int seen = 0;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        ++seen;
        for (int c : children_[s]) {
            level_[c] = level_[s] + 1;
            stack.push_back(c);
        }
    }
    if (seen != n) throw DomainError("parent structure has a cycle");

    for (int s = 0; s < n; ++s) {
        auto& nd = nodes_[s];
        if (nd.mult < 1) throw DomainError("multiplicities must be positive");
        if (nd.ornament.empty()) throw DomainError("empty ornament label");
        std::sort(nd.A.begin(), nd.A.end());
        nd.A.erase(std::unique(nd.A.begin(), nd.A.end()), nd.A.end());
        for (int a : nd.A)
            if (a < 0 || a >= level_[s]) throw DomainError("colour set A out of range at node " + std::to_string(s));
    }
    if (nodes_[root_].mult != 1) throw DomainError("root multiplicity must be 1");
}

int ColouredRootedTree::height() const {
    return *std::max_element(level_.begin(), level_.end()) + 1;
}

std::vector<int> ColouredRootedTree::chain(int s) const {
    std::vector<int> out;
    for (std::optional<int> x = s; x; x = nodes_[*x].parent) out.push_back(*x);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> ColouredRootedTree::subtree(int s) const {
    std::vector<int> out, stack{s};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (auto it = children_[x].rbegin(); it != children_[x].rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::vector<int> ColouredRootedTree::preorder() const { return subtree(root_); }

bool ColouredRootedTree::unit_mults() const {
    return std::all_of(nodes_.begin(), nodes_.end(), [](const TreeNode& t) { return t.mult == 1; });
}

ColouredRootedTree ColouredRootedTree::with_mults(std::span<const std::int64_t> mults) const {
    if (int(mults.size()) != size()) throw DomainError("one multiplicity per node expected");
    auto nodes = nodes_;
    for (int s = 0; s < size(); ++s) nodes[s].mult = mults[s];
    return ColouredRootedTree(std::move(nodes));
}

ColouredRootedTree ColouredRootedTree::with_unit_mults() const {
    auto nodes = nodes_;
    for (auto& nd : nodes) nd.mult = 1;
    return ColouredRootedTree(std::move(nodes));
}

// ---------------------------------------------------------------------------

namespace {

std::string colour_prefix(const TreeNode& nd) {
    std::string s = "(";
    for (std::size_t i = 0; i < nd.A.size(); ++i) s += (i ? "," : "") + std::to_string(nd.A[i]);
    s += ";" + nd.ornament;
    return s;
}

std::string encode(const ColouredRootedTree& t, int s, bool own_mult, bool mults) {
    const auto& nd = t.node(s);
    std::vector<std::string> kids;
    for (int c : t.children(s)) kids.push_back(encode(t, c, mults, mults));
    std::sort(kids.begin(), kids.end());
    std::string out = colour_prefix(nd);
    if (own_mult) out += ";" + std::to_string(nd.mult);
    out += ":";
    for (const auto& k : kids) out += k;
    return out + ")";
}

}  // namespace

std::string canonical_string(const ColouredRootedTree& t, int s, bool root_mult, bool mults) {
    return encode(t, s, root_mult && mults, mults);
}

std::string canonical_string(const ColouredRootedTree& t) { return canonical_string(t, t.root()); }

bool colour_isomorphic(const ColouredRootedTree& a, const ColouredRootedTree& b) {
    return a.size() == b.size() && canonical_string(a) == canonical_string(b);
}

WeightedGraph closure(const ColouredRootedTree& t, bool ignore_mult) {
    if (!ignore_mult && !t.unit_mults()) throw DomainError("closure needs unit multiplicities");
    GraphBuilder b(t.size());
    for (int s = 0; s < t.size(); ++s) {
        auto ch = t.chain(s);
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) b.set(ch[i], s, 1);
    }
    return b.build();
}

WeightedGraph decode_subgraph(const ColouredRootedTree& t, bool ignore_mult) {
    if (!ignore_mult && !t.unit_mults()) throw DomainError("decoding needs unit multiplicities");
    GraphBuilder b(t.size());
    for (int s = 0; s < t.size(); ++s) {
        if (t.node(s).A.empty()) continue;
        auto ch = t.chain(s);
        for (int a : t.node(s).A) b.set(ch[a], s, 1);
    }
    return b.build();
}

ColouredRootedTree encode_subgraph(const WeightedGraph& h, const std::vector<std::optional<int>>& parent) {
    if (!h.is_simple()) throw DomainError("encoding needs a simple graph");
    if (int(parent.size()) != h.n()) throw DomainError("elimination tree must span V(H)");
    std::vector<TreeNode> nodes(h.n());
    for (int v = 0; v < h.n(); ++v) nodes[v].parent = parent[v];
    ColouredRootedTree shape(nodes);
    for (const auto& e : h.edges()) {
        int u = e.u, v = e.v;
        if (shape.level(u) > shape.level(v)) std::swap(u, v);
        auto ch = shape.chain(v);
        if (ch[shape.level(u)] != u)
            throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " joins incomparable tree nodes");
        nodes[v].A.push_back(shape.level(u));
    }
    return ColouredRootedTree(std::move(nodes));
}

ColouredRootedTree branch_at(const ColouredRootedTree& t, int s) {
    if (s < 0 || s >= t.size()) throw DomainError("node out of range");
    if (s == t.root()) throw DomainError("cannot branch at the root");
    auto nodes = t.nodes();
    std::int64_t k = nodes[s].mult;
    nodes[s].mult = 1;
    auto sub = t.subtree(s);
    if (nodes.size() + std::size_t(k - 1) * sub.size() > kMaxBranchedNodes)
        throw ResourceError("branched tree too large");
    for (std::int64_t c = 1; c < k; ++c) {
        std::vector<int> index(t.size(), -1);
        for (int x : sub) {
            index[x] = int(nodes.size());
            TreeNode nd = t.node(x);
            if (x == s) {
                nd.mult = 1;
            } else {
                nd.parent = index[*nd.parent];
            }
            nodes.push_back(std::move(nd));
        }
    }
    return ColouredRootedTree(std::move(nodes));
}

BranchedTree k_branching(const ColouredRootedTree& t) {
    std::size_t total = 0;
    std::vector<std::size_t> copies(t.size(), 0);
    for (int s : t.preorder()) {
        const auto& nd = t.node(s);
        copies[s] = nd.parent ? copies[*nd.parent] * std::size_t(nd.mult) : 1;
        total += copies[s];
        if (copies[s] > kMaxBranchedNodes || total > kMaxBranchedNodes) throw ResourceError("branched tree too large");
    }
    BranchedTree out;
    std::vector<TreeNode> nodes;
    nodes.reserve(total);
    out.origin.reserve(total);
    std::function<void(int, std::optional<int>)> build = [&](int s, std::optional<int> parent) {
        for (std::int64_t c = 0; c < t.node(s).mult; ++c) {
            int id = int(nodes.size());
            TreeNode nd = t.node(s);
            nd.parent = parent;
            nd.mult = 1;
            nodes.push_back(std::move(nd));
            out.origin.push_back(s);
            for (int ch : t.children(s)) build(ch, id);
        }
    };
    build(t.root(), std::nullopt);
    out.tree = ColouredRootedTree(std::move(nodes));
    return out;
}

BranchedTree k_branching(const ColouredRootedTree& t, std::span<const std::int64_t> k) {
    return k_branching(t.with_mults(k));
}

WeightedGraph branched_composition(const ColouredRootedTree& t, const OrnamentTable& ornaments) {
    auto bt = k_branching(t);
    OrnamentedGraph og;
    og.base = decode_subgraph(bt.tree);
    og.ornaments.reserve(bt.origin.size());
    for (int o : bt.origin) {
        auto it = ornaments.find(t.node(o).ornament);
        if (it == ornaments.end()) throw DomainError("ornament '" + t.node(o).ornament + "' missing from table");
        og.ornaments.push_back(it->second);
    }
    return compose(og);
}

std::pair<ColouredRootedTree, OrnamentTable> path_tree_composition(std::span<const std::int64_t> j,
                                                                   std::span<const std::int64_t> k) {
    if (j.size() != k.size()) throw DomainError("j and k must have the same length");
    std::size_t d = j.size();
    std::vector<TreeNode> nodes(d + 1);
    nodes[0].ornament = "R";
    OrnamentTable table;
    GraphBuilder one(1);
    one.set(0, 0, 1);
    table["R"] = one.build();
    for (std::size_t l = 1; l <= d; ++l) {
        nodes[l].parent = int(l - 1);
        nodes[l].A.resize(l);
        std::iota(nodes[l].A.begin(), nodes[l].A.end(), 0);
        nodes[l].ornament = "F" + std::to_string(l);
        nodes[l].mult = k[l - 1];
        if (j[l - 1] < 1) throw DomainError("ornament sizes must be positive");
        GraphBuilder b(int(j[l - 1]));
        for (int u = 0; u < j[l - 1]; ++u)
            for (int v = u; v < j[l - 1]; ++v) b.set(u, v, 1);
        table[nodes[l].ornament] = b.build();
    }
    return {ColouredRootedTree(std::move(nodes)), std::move(table)};
}

Rational path_closure_state_sum(const Multigraph& g, std::span<const std::int64_t> j, std::span<const std::int64_t> k,
                                std::uint64_t budget) {
    if (j.size() != k.size()) throw DomainError("j and k must have the same length");
    int n = g.n();
    std::size_t d = j.size();
    std::uint64_t terms = 1;
    for (int i = 0; i < n; ++i) {
        terms *= d + 1;
        if (terms > budget) throw ResourceError("state sum exceeds budget");
    }
    std::vector<int> block(n, 0);
    std::vector<int> uf(n);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    BigInt total = 0;
    for (std::uint64_t it = 0; it < terms; ++it) {
        std::uint64_t r = it;
        for (int v = 0; v < n; ++v) {
            block[v] = int(r % (d + 1));
            r /= d + 1;
        }
        BigInt term = 1;
        for (std::size_t l = 1; l <= d && term != 0; ++l) {
            int size = 0;
            for (int v = 0; v < n; ++v) size += block[v] == int(l);
            // components of G restricted to vertices in blocks >= l
            std::iota(uf.begin(), uf.end(), 0);
            int comps = 0;
            for (int v = 0; v < n; ++v) comps += block[v] >= int(l);
            for (auto [u, v] : g.edges())
                if (block[u] >= int(l) && block[v] >= int(l)) {
                    int a = find(u), b = find(v);
                    if (a != b) {
                        uf[a] = b;
                        --comps;
                    }
                }
            BigInt f;
            mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(j[l - 1]), unsigned(size));
            term *= f;
            mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(k[l - 1]), unsigned(comps));
            term *= f;
        }
        total += term;
    }
    return Rational(total);
}

// ---------------------------------------------------------------------------

namespace {

struct CoreNode {
    TreeNode colour;
    std::vector<CoreNode> children;
    std::string key;  // without own multiplicity
};

std::string full_key(const CoreNode& c) { return c.key + "*" + std::to_string(c.colour.mult); }

CoreNode reduce(const ColouredRootedTree& t, int s) {
    CoreNode out;
    out.colour = t.node(s);
    out.colour.parent.reset();
    std::map<std::string, std::size_t> seen;
    for (int c : t.children(s)) {
        CoreNode sub = reduce(t, c);
        auto [it, fresh] = seen.emplace(sub.key, out.children.size());
        if (fresh)
            out.children.push_back(std::move(sub));
        else
            out.children[it->second].colour.mult += sub.colour.mult;
    }
    std::sort(out.children.begin(), out.children.end(),
              [](const CoreNode& a, const CoreNode& b) { return full_key(a) < full_key(b); });
    out.key = colour_prefix(out.colour) + ":";
    for (const auto& c : out.children) out.key += full_key(c);
    out.key += ")";
    return out;
}

void flatten(const CoreNode& c, std::optional<int> parent, std::vector<TreeNode>& nodes) {
    int id = int(nodes.size());
    TreeNode nd = c.colour;
    nd.parent = parent;
    nodes.push_back(std::move(nd));
    for (const auto& ch : c.children) flatten(ch, id, nodes);
}

}  // namespace

BranchingCore branching_core(const ColouredRootedTree& t) {
    CoreNode root = reduce(t, t.root());
    std::vector<TreeNode> nodes;
    flatten(root, std::nullopt, nodes);
    return {ColouredRootedTree(std::move(nodes))};
}

int bc(const ColouredRootedTree& t) { return branching_core(t).tree.size(); }

}  // namespace strongpoly
