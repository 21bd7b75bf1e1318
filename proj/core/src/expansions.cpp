#include "strongpoly/expansions.hpp"

#include <algorithm>
#include <numeric>

#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

constexpr std::size_t kMaxExpansionEdges = 14;

void check_edges(const Multigraph& g) {
    if (g.m() > kMaxExpansionEdges) throw ResourceError("expansion limited to 14 edges of G");
}

// Identify endpoints of every edge with state `merge`, drop edges with state
// `drop`, turn edges with state `loop` into loops at the merged vertex.
Multigraph minor_by_state(const Multigraph& g, const std::vector<int>& state, int drop, int merge, int loop) {
    int n = g.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (state[i] == merge || state[i] == loop) parent[find(es[i].first)] = find(es[i].second);
    std::vector<int> id(n, -1);
    int c = 0;
    for (int v = 0; v < n; ++v)
        if (id[find(v)] < 0) id[find(v)] = c++;
    Multigraph out(c);
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (state[i] == drop || state[i] == merge) continue;
        out.add_edge(id[find(es[i].first)], id[find(es[i].second)]);
    }
    return out;
}

// Iterate all assignments of `states` values to the edges.
template <class F>
void for_each_state(std::size_t m, int states, F&& f) {
    std::vector<int> s(m, 0);
    while (true) {
        f(s);
        std::size_t i = 0;
        while (i < m && ++s[i] == states) s[i++] = 0;
        if (i == m) break;
    }
}

}  // namespace

Rational hom_via_minor_expansion(const Multigraph& g, const WeightedGraph& h, const HomOptions& opt) {
    if (!h.is_simple()) throw DomainError("minor expansion requires a simple H");
    check_edges(g);
    CompiledTarget t(h);
    Rational total;
    // state 0: in D (deleted), 1: in C (contracted), 2: kept
    for_each_state(g.m(), 3, [&](const std::vector<int>& s) {
        std::size_t deleted = std::count(s.begin(), s.end(), 0);
        Rational v = hom(minor_by_state(g, s, 0, 1, -1), t, opt);
        if ((g.m() - deleted) % 2)
            total -= v;
        else
            total += v;
    });
    return total;
}

Rational hom_via_spanning_expansion(const Multigraph& g, const WeightedGraph& h, const HomOptions& opt) {
    if (!h.is_zero_one()) throw DomainError("spanning expansion requires 0/1 weights");
    check_edges(g);
    CompiledTarget t(h);
    Rational total;
    // state 0: in D (deleted), 1: kept
    for_each_state(g.m(), 2, [&](const std::vector<int>& s) {
        std::vector<bool> removed(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) removed[i] = s[i] == 0;
        std::size_t deleted = std::count(s.begin(), s.end(), 0);
        Rational v = hom(g.delete_edges(removed), t, opt);
        if ((g.m() - deleted) % 2)
            total -= v;
        else
            total += v;
    });
    return total;
}

Rational hom_via_composition_expansion(const Multigraph& g, const OrnamentedGraph& og, const HomOptions& opt) {
    const WeightedGraph& base = og.base;
    if (!base.is_simple()) throw DomainError("composition expansion requires a simple base");
    if (int(og.ornaments.size()) != base.n()) throw DomainError("one ornament per base vertex required");
    int k = g.n(), n = base.n();
    if (k == 0) return 1;
    if (n == 0) return 0;
    std::vector<CompiledTarget> orn;
    for (const auto& f : og.ornaments) orn.emplace_back(f);
    std::vector<int> f(k, 0);
    Rational total;
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (f[u] != f[v] && base.weight(f[u], f[v]).is_zero()) {
                ok = false;
                break;
            }
        if (ok) {
            Rational term = 1;
            for (int b = 0; b < n && !term.is_zero(); ++b) {
                std::vector<int> pre;
                for (int x = 0; x < k; ++x)
                    if (f[x] == b) pre.push_back(x);
                if (!pre.empty()) term *= hom(g.induced(pre), orn[b], opt);
            }
            total += term;
        }
        int i = 0;
        while (i < k && ++f[i] == n) f[i++] = 0;
        if (i == k) break;
    }
    return total;
}

Rational hom_via_affine_expansion(const Multigraph& g, const WeightedGraph& h, const Rational& alpha,
                                  const Rational& beta, const Rational& alpha_d, const Rational& beta_d,
                                  const HomOptions& opt) {
    check_edges(g);
    CompiledTarget t(h);
    // state 0: deleted, 1: kept, 2: contracted and removed, 3: contracted, kept as loop
    const Rational coef[4] = {alpha, beta, alpha_d - alpha, beta_d - beta};
    Rational total;
    for_each_state(g.m(), 4, [&](const std::vector<int>& s) {
        Rational c = 1;
        for (int x : s) {
            c *= coef[x];
            if (c.is_zero()) return;
        }
        total += c * hom(minor_by_state(g, s, 0, 2, 3), t, opt);
    });
    return total;
}

}  // namespace strongpoly
