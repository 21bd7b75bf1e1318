#include <algorithm>
#include <numeric>

#include "strongpoly/errors.hpp"
#include "strongpoly/graph.hpp"

namespace strongpoly {

namespace {

void require_simple(const WeightedGraph& h, const char* op) {
    if (!h.is_simple()) throw DomainError(std::string(op) + " requires a simple graph");
}

}  // namespace

WeightedGraph complement(const WeightedGraph& h) {
    require_simple(h, "complement");
    GraphBuilder b(h.n());
    for (int u = 0; u < h.n(); ++u) {
        auto r = h.row(u);
        auto it = r.begin();
        for (int v = u + 1; v < h.n(); ++v) {
            while (it != r.end() && it->to < v) ++it;
            if (it == r.end() || it->to != v) b.set(u, v, 1);
        }
    }
    return b.build();
}

WeightedGraph looped_complement(const WeightedGraph& h) {
    if (!h.is_zero_one()) throw DomainError("looped complement requires 0/1 weights");
    GraphBuilder b(h.n());
    for (int u = 0; u < h.n(); ++u) {
        auto r = h.row(u);
        auto it = r.begin();
        for (int v = u; v < h.n(); ++v) {
            while (it != r.end() && it->to < v) ++it;
            if (it == r.end() || it->to != v) b.set(u, v, 1);
        }
    }
    return b.build();
}

WeightedGraph affine_reweight(const WeightedGraph& h, const Rational& alpha, const Rational& beta,
                              const Rational& alpha_d, const Rational& beta_d) {
    GraphBuilder b(h.n());
    for (int u = 0; u < h.n(); ++u) {
        auto r = h.row(u);
        auto it = r.begin();
        for (int v = u; v < h.n(); ++v) {
            while (it != r.end() && it->to < v) ++it;
            Rational a = (it != r.end() && it->to == v) ? it->w : Rational();
            Rational w = u == v ? alpha_d + beta_d * a : alpha + beta * a;
            if (!w.is_zero()) b.set(u, v, std::move(w));
        }
    }
    return b.build();
}

WeightedGraph line_graph(const WeightedGraph& h) {
    require_simple(h, "line graph");
    auto es = h.edges();
    int m = int(es.size());
    std::vector<std::vector<int>> incident(h.n());
    for (int i = 0; i < m; ++i) {
        incident[es[i].u].push_back(i);
        incident[es[i].v].push_back(i);
    }
    GraphBuilder b(m);
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t c = a + 1; c < inc.size(); ++c) b.set(inc[a], inc[c], 1);
    return b.build();
}

WeightedGraph disjoint_union(const WeightedGraph& f, const WeightedGraph& h) {
    GraphBuilder b(f.n() + h.n());
    for (const auto& e : f.edges()) b.set(e.u, e.v, e.w);
    for (const auto& e : h.edges()) b.set(e.u + f.n(), e.v + f.n(), e.w);
    return b.build();
}

WeightedGraph categorical_product(const WeightedGraph& f, const WeightedGraph& h) {
    int nh = h.n();
    GraphBuilder b(f.n() * nh);
    for (int u = 0; u < f.n(); ++u)
        for (const auto& fu : f.row(u)) {
            if (fu.to < u) continue;
            for (int v = 0; v < nh; ++v)
                for (const auto& hv : h.row(v)) {
                    // (u,v)~(u',v') and, when u != u', also (u,v')~(u',v)
                    if (fu.to == u && hv.to < v) continue;
                    b.set(u * nh + v, fu.to * nh + hv.to, fu.w * hv.w);
                }
        }
    return b.build();
}

WeightedGraph join(const WeightedGraph& f, const WeightedGraph& h) {
    require_simple(f, "join");
    require_simple(h, "join");
    GraphBuilder b(f.n() + h.n());
    for (const auto& e : f.edges()) b.set(e.u, e.v, 1);
    for (const auto& e : h.edges()) b.set(e.u + f.n(), e.v + f.n(), 1);
    for (int u = 0; u < f.n(); ++u)
        for (int v = 0; v < h.n(); ++v) b.set(u, f.n() + v, 1);
    return b.build();
}

WeightedGraph compose(const OrnamentedGraph& og) {
    const auto& base = og.base;
    if (!base.is_simple()) throw DomainError("compose requires a simple base graph");
    if (int(og.ornaments.size()) != base.n()) throw DomainError("compose needs one ornament per base vertex");
    std::vector<int> start(std::size_t(base.n()) + 1, 0);
    for (int v = 0; v < base.n(); ++v) start[v + 1] = start[v] + og.ornaments[v].n();
    GraphBuilder b(start.back());
    for (int v = 0; v < base.n(); ++v)
        for (const auto& e : og.ornaments[v].edges()) b.set(start[v] + e.u, start[v] + e.v, e.w);
    for (const auto& e : base.edges())
        for (int x = start[e.u]; x < start[e.u + 1]; ++x)
            for (int y = start[e.v]; y < start[e.v + 1]; ++y) b.set(x, y, 1);
    return b.build();
}

WeightedGraph blow_up(const WeightedGraph& h, std::span<const std::int64_t> k) {
    if (!h.is_zero_one()) throw DomainError("blow-up requires 0/1 weights");
    if (int(k.size()) != h.n()) throw DomainError("blow-up needs one multiplicity per vertex");
    OrnamentedGraph og;
    GraphBuilder base(h.n());
    for (const auto& e : h.edges())
        if (e.u != e.v) base.set(e.u, e.v, 1);
    og.base = base.build();
    for (int v = 0; v < h.n(); ++v) {
        if (k[v] < 1) throw DomainError("blow-up multiplicities must be positive");
        int s = int(k[v]);
        GraphBuilder orn(s);
        if (!h.loop(v).is_zero())
            for (int x = 0; x < s; ++x)
                for (int y = x + 1; y < s; ++y) orn.set(x, y, 1);
        og.ornaments.push_back(orn.build());
    }
    return compose(og);
}

WeightedGraph lexicographic_product(const WeightedGraph& f, const WeightedGraph& h) {
    require_simple(f, "lexicographic product");
    OrnamentedGraph og{f, std::vector<WeightedGraph>(std::size_t(f.n()), h)};
    return compose(og);
}

WeightedGraph induced_subgraph(const WeightedGraph& h, std::span<const int> vertices) {
    std::vector<int> id(std::size_t(h.n()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) id[vertices[i]] = int(i);
    GraphBuilder b(int(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (const auto& nb : h.row(vertices[i]))
            if (id[nb.to] >= int(i)) b.set(int(i), id[nb.to], nb.w);
    return b.build();
}

WeightedGraph relabel(const WeightedGraph& h, std::span<const int> perm) {
    if (int(perm.size()) != h.n()) throw DomainError("permutation size mismatch");
    GraphBuilder b(h.n());
    for (const auto& e : h.edges()) b.set(perm[e.u], perm[e.v], e.w);
    return b.build();
}

int connected_components(const WeightedGraph& h, std::vector<int>& comp) {
    comp.assign(std::size_t(h.n()), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < h.n(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& nb : h.row(v))
                if (comp[nb.to] < 0) {
                    comp[nb.to] = c;
                    stack.push_back(nb.to);
                }
        }
        ++c;
    }
    return c;
}

}  // namespace strongpoly
