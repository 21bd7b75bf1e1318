#include <algorithm>
#include <map>
#include <memory>

#include "strongpoly/canonical.hpp"
#include "strongpoly/coloured_tree.hpp"
#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

// A reduced subtree for a set of vertices hanging below a fixed chain.
struct Form {
    std::vector<int> A;
    std::string orn;
    std::vector<std::pair<std::shared_ptr<const Form>, std::int64_t>> children;  // sorted by key
    std::string key;  // without own multiplicity
    int size = 1;
    // elimination tree witness: (vertex, parent vertex or -1 for the subtree root)
    std::vector<std::pair<int, int>> witness;
};
using FormPtr = std::shared_ptr<const Form>;
using FormSet = std::map<std::string, FormPtr>;

// Next restricted growth string (set partition of positions); false when done.
bool next_partition(std::vector<int>& rg) {
    for (std::size_t i = rg.size(); i-- > 1;) {
        int mx = *std::max_element(rg.begin(), rg.begin() + long(i));
        if (rg[i] <= mx) {
            ++rg[i];
            std::fill(rg.begin() + long(i) + 1, rg.end(), 0);
            return true;
        }
    }
    return false;
}

struct Search {
    int n = 0;
    std::vector<std::uint32_t> adj;
    std::vector<std::string> labels;
    std::map<std::string, FormSet> memo;

    std::vector<std::uint32_t> components(std::uint32_t s) const {
        std::vector<std::uint32_t> out;
        while (s) {
            std::uint32_t comp = s & (~s + 1), frontier = comp;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctz(f)];
                next &= s & ~comp;
                comp |= next;
                frontier = next;
            }
            out.push_back(comp);
            s &= ~comp;
        }
        return out;
    }

    // profile[v]: bit i set iff v is adjacent to the chain vertex at level i
    const FormSet& solve(std::uint32_t s, int len, const std::vector<std::uint32_t>& profile) {
        std::string key(1, char(len));
        key += std::to_string(s);
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) key += "," + std::to_string(profile[v]);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        FormSet out;
        for (int r = 0; r < n; ++r) {
            if (!(s >> r & 1)) continue;
            std::vector<int> A;
            for (int i = 0; i < len; ++i)
                if (profile[r] >> i & 1) A.push_back(i);
            std::vector<std::uint32_t> next = profile;
            std::uint32_t rest = s & ~(std::uint32_t(1) << r);
            for (int v = 0; v < n; ++v)
                if ((rest >> v & 1) && (adj[v] >> r & 1)) next[v] |= std::uint32_t(1) << len;
            auto comps = components(rest);

            // set partitions of the components via restricted growth strings
            std::size_t q = comps.size();
            std::vector<int> rg(q, 0);
            while (true) {
                int blocks = q ? *std::max_element(rg.begin(), rg.end()) + 1 : 0;
                std::vector<std::uint32_t> masks(blocks, 0);
                for (std::size_t i = 0; i < q; ++i) masks[rg[i]] |= comps[i];
                std::vector<std::vector<FormPtr>> options;
                for (auto m : masks) {
                    const FormSet& fs = solve(m, len + 1, next);
                    std::vector<FormPtr> opts;
                    for (const auto& [k, f] : fs) opts.push_back(f);
                    options.push_back(std::move(opts));
                }
                // cartesian product over block choices
                std::vector<std::size_t> pick(blocks, 0);
                while (true) {
                    add_form(out, r, A, options, pick);
                    std::size_t i = 0;
                    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
                    if (i == pick.size()) break;
                }
                if (!next_partition(rg)) break;
            }
        }
        return memo.emplace(std::move(key), std::move(out)).first->second;
    }

    void add_form(FormSet& out, int r, const std::vector<int>& A, const std::vector<std::vector<FormPtr>>& options,
                  const std::vector<std::size_t>& pick) const {
        std::map<std::string, std::pair<FormPtr, std::int64_t>> grouped;
        for (std::size_t b = 0; b < pick.size(); ++b) {
            const FormPtr& f = options[b][pick[b]];
            auto [it, fresh] = grouped.emplace(f->key, std::make_pair(f, std::int64_t(1)));
            if (!fresh) ++it->second.second;
        }
        auto form = std::make_shared<Form>();
        form->A = A;
        form->orn = labels[r];
        for (auto& [k, fc] : grouped) form->children.push_back(fc);
        std::sort(form->children.begin(), form->children.end(), [](const auto& a, const auto& b) {
            return std::tie(a.first->key, a.second) < std::tie(b.first->key, b.second);
        });
        form->key = "(";
        for (std::size_t i = 0; i < A.size(); ++i) form->key += (i ? "," : "") + std::to_string(A[i]);
        form->key += ";" + form->orn + ":";
        for (const auto& [f, c] : form->children) {
            form->key += f->key + "*" + std::to_string(c);
            form->size += f->size;
        }
        form->key += ")";
        if (out.count(form->key)) return;
        form->witness.emplace_back(r, -1);
        for (std::size_t b = 0; b < pick.size(); ++b)
            for (auto [v, p] : options[b][pick[b]]->witness) form->witness.emplace_back(v, p < 0 ? r : p);
        std::string k = form->key;
        out.emplace(std::move(k), std::move(form));
    }
};

void flatten(const Form& f, std::int64_t mult, std::optional<int> parent, std::vector<TreeNode>& nodes) {
    int id = int(nodes.size());
    nodes.push_back(TreeNode{parent, f.A, f.orn, mult});
    for (const auto& [c, m] : f.children) flatten(*c, m, id, nodes);
}

// Children ordered by shape first so equal shapes line up position by position.
ColouredRootedTree shape_ordered(const ColouredRootedTree& t) {
    std::vector<TreeNode> nodes;
    auto rec = [&](auto&& self, int s, std::optional<int> parent) -> void {
        int id = int(nodes.size());
        TreeNode nd = t.node(s);
        nd.parent = parent;
        nodes.push_back(std::move(nd));
        std::vector<std::tuple<std::string, std::string, int>> kids;
        for (int c : t.children(s))
            kids.emplace_back(canonical_string(t, c, true, false), canonical_string(t, c), c);
        std::sort(kids.begin(), kids.end());
        for (const auto& [a, b, c] : kids) self(self, c, id);
    };
    rec(rec, t.root(), std::nullopt);
    return ColouredRootedTree(std::move(nodes));
}

}  // namespace

MinBcResult min_bc(const WeightedGraph& h, const std::vector<std::string>& labels) {
    if (!h.is_simple()) throw DomainError("min_bc needs a simple graph");
    if (h.n() > kMinBcCap) throw ResourceError("min_bc is limited to 8 vertices");
    if (h.n() == 0) throw DomainError("min_bc needs a non-empty graph");
    if (!labels.empty() && int(labels.size()) != h.n()) throw DomainError("one label per vertex expected");
    Search search;
    search.n = h.n();
    search.adj.assign(h.n(), 0);
    for (const auto& e : h.edges()) {
        search.adj[e.u] |= std::uint32_t(1) << e.v;
        search.adj[e.v] |= std::uint32_t(1) << e.u;
    }
    search.labels = labels.empty() ? std::vector<std::string>(h.n(), "K1") : labels;
    std::uint32_t all = (std::uint32_t(1) << h.n()) - 1;
    const FormSet& forms = search.solve(all, 0, std::vector<std::uint32_t>(h.n(), 0));

    MinBcResult best;
    std::string best_stripped, best_full;
    for (const auto& [key, f] : forms) {
        if (best.value && f->size > best.value) continue;
        std::vector<TreeNode> nodes;
        flatten(*f, 1, std::nullopt, nodes);
        ColouredRootedTree core(std::move(nodes));
        std::string stripped = canonical_string(core, core.root(), true, false);
        std::string full = canonical_string(core);
        if (best.value == f->size && std::tie(stripped, full) >= std::tie(best_stripped, best_full)) continue;
        best.value = f->size;
        best.core = std::move(core);
        best_stripped = std::move(stripped);
        best_full = std::move(full);
        best.parent.assign(h.n(), std::nullopt);
        for (auto [v, p] : f->witness)
            if (p >= 0) best.parent[v] = p;
    }
    return best;
}

PartitionResult partition_family(const std::vector<WeightedGraph>& graphs, int bc_bound) {
    PartitionResult out;
    std::map<std::string, std::size_t> group_of;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto r = min_bc(graphs[i]);
        if (r.value > bc_bound) {
            out.unpartitionable.push_back(i);
            continue;
        }
        ColouredRootedTree ordered = shape_ordered(r.core);
        ColouredRootedTree shape = ordered.with_unit_mults();
        std::string key = canonical_string(shape);
        auto [it, fresh] = group_of.emplace(key, out.groups.size());
        if (fresh) {
            FamilyGroup g;
            g.shape = shape;
            for (int s : shape.preorder())
                if (s != shape.root()) g.non_root.push_back(s);
            out.groups.push_back(std::move(g));
        }
        FamilyGroup& g = out.groups[it->second];
        std::vector<std::int64_t> tuple;
        for (int s : g.non_root) tuple.push_back(ordered.node(s).mult);

        std::vector<std::int64_t> mults(g.shape.size(), 1);
        for (std::size_t p = 0; p < g.non_root.size(); ++p) mults[g.non_root[p]] = tuple[p];
        auto rebuilt = decode_subgraph(k_branching(g.shape, mults).tree);
        if (!is_isomorphic(rebuilt, graphs[i]))
            throw Error("re-branching did not reproduce graph " + std::to_string(i));
        g.members.push_back(i);
        g.indices.push_back(std::move(tuple));
    }
    return out;
}

}  // namespace strongpoly
