#include "strongpoly/graph.hpp"

#include <algorithm>
#include <numeric>

#include "strongpoly/errors.hpp"

namespace strongpoly {

WeightedGraph::WeightedGraph(int n) : n_(n), offset_(std::size_t(n) + 1, 0) {
    if (n < 0) throw DomainError("negative vertex count");
}

Rational WeightedGraph::weight(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex out of range");
    auto r = row(u);
    auto it = std::lower_bound(r.begin(), r.end(), v, [](const Neighbor& a, int t) { return a.to < t; });
    if (it != r.end() && it->to == v) return it->w;
    return Rational();
}

std::vector<WeightedEdge> WeightedGraph::edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(pairs_);
    for (int u = 0; u < n_; ++u)
        for (const auto& nb : row(u))
            if (nb.to >= u) out.push_back({u, nb.to, nb.w});
    return out;
}

bool WeightedGraph::has_loops() const {
    for (int u = 0; u < n_; ++u)
        for (const auto& nb : row(u))
            if (nb.to == u) return true;
    return false;
}

bool WeightedGraph::is_simple() const { return !has_loops() && is_zero_one(); }

bool WeightedGraph::is_zero_one() const {
    return std::all_of(adj_.begin(), adj_.end(), [](const Neighbor& nb) { return nb.w.is_one(); });
}

bool WeightedGraph::has_integer_weights() const {
    return std::all_of(adj_.begin(), adj_.end(), [](const Neighbor& nb) { return nb.w.is_integer(); });
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n_ != b.n_ || a.adj_.size() != b.adj_.size() || a.offset_ != b.offset_) return false;
    for (std::size_t i = 0; i < a.adj_.size(); ++i)
        if (a.adj_[i].to != b.adj_[i].to || a.adj_[i].w != b.adj_[i].w) return false;
    return true;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
}

GraphBuilder& GraphBuilder::set(int u, int v, Rational w) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex out of range");
    if (u > v) std::swap(u, v);
    ops_.push_back({u, v, std::move(w), false});
    return *this;
}

GraphBuilder& GraphBuilder::add(int u, int v, Rational w) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex out of range");
    if (u > v) std::swap(u, v);
    ops_.push_back({u, v, std::move(w), true});
    return *this;
}

WeightedGraph GraphBuilder::build() const {
    std::vector<std::size_t> idx(ops_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const Op& x = ops_[a];
        const Op& y = ops_[b];
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    });

    struct Merged {
        int u, v;
        Rational w;
    };
    std::vector<Merged> merged;
    merged.reserve(idx.size());
    for (std::size_t i : idx) {
        const Op& op = ops_[i];
        if (!merged.empty() && merged.back().u == op.u && merged.back().v == op.v) {
            if (op.accumulate)
                merged.back().w += op.w;
            else
                merged.back().w = op.w;
        } else {
            merged.push_back({op.u, op.v, op.w});
        }
    }

    WeightedGraph g(n_);
    std::vector<std::size_t> back(std::size_t(n_), 0), fwd(std::size_t(n_), 0);
    for (const auto& e : merged) {
        if (e.w.is_zero()) continue;
        ++g.pairs_;
        ++fwd[e.u];
        if (e.u != e.v) ++back[e.v];
    }
    for (int v = 0; v < n_; ++v) g.offset_[v + 1] = g.offset_[v] + back[v] + fwd[v];
    g.adj_.resize(g.offset_[n_]);
    // Row v holds neighbours below v first, then v itself and those above.
    // Both groups arrive in increasing order because merged is sorted by (u, v).
    std::vector<std::size_t> bpos(static_cast<std::size_t>(n_)), fpos(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        bpos[v] = g.offset_[v];
        fpos[v] = g.offset_[v] + back[v];
    }
    for (const auto& e : merged) {
        if (e.w.is_zero()) continue;
        g.adj_[fpos[e.u]++] = {e.v, e.w};
        if (e.u != e.v) g.adj_[bpos[e.v]++] = {e.u, e.w};
    }
    return g;
}

// ---------------------------------------------------------------------------

Multigraph::Multigraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
    for (auto [u, v] : edges) add_edge(u, v);
}

Multigraph& Multigraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex out of range");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    return *this;
}

Multigraph Multigraph::from_weighted(const WeightedGraph& g) {
    Multigraph m(g.n());
    for (const auto& e : g.edges()) {
        auto k = e.w.to_int64();
        if (!k || *k <= 0) throw DomainError("multigraph conversion needs positive integer weights");
        for (std::int64_t i = 0; i < *k; ++i) m.add_edge(e.u, e.v);
    }
    return m;
}

WeightedGraph Multigraph::to_weighted() const {
    GraphBuilder b(n_);
    for (auto [u, v] : edges_) b.add(u, v, 1);
    return b.build();
}

bool Multigraph::is_simple() const {
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i].second) return false;
        if (i && sorted[i] == sorted[i - 1]) return false;
    }
    return true;
}

std::size_t Multigraph::loop_count() const {
    return std::count_if(edges_.begin(), edges_.end(), [](auto e) { return e.first == e.second; });
}

int Multigraph::components(std::vector<int>& comp) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges_) parent[find(u)] = find(v);
    comp.assign(n_, -1);
    int c = 0;
    std::vector<int> id(n_, -1);
    for (int v = 0; v < n_; ++v) {
        int r = find(v);
        if (id[r] < 0) id[r] = c++;
        comp[v] = id[r];
    }
    return c;
}

int Multigraph::component_count() const {
    std::vector<int> comp;
    return components(comp);
}

Multigraph Multigraph::delete_edges(const std::vector<bool>& removed) const {
    Multigraph out(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (!removed[i]) out.edges_.push_back(edges_[i]);
    return out;
}

Multigraph Multigraph::minor(const std::vector<bool>& contract, const std::vector<bool>& remove) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (contract[i]) parent[find(edges_[i].first)] = find(edges_[i].second);
    std::vector<int> id(n_, -1);
    int c = 0;
    for (int v = 0; v < n_; ++v) {
        int r = find(v);
        if (id[r] < 0) id[r] = c++;
    }
    Multigraph out(c);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (contract[i] || remove[i]) continue;
        out.add_edge(id[find(edges_[i].first)], id[find(edges_[i].second)]);
    }
    return out;
}

Multigraph Multigraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> id(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) id[vertices[i]] = int(i);
    Multigraph out(int(vertices.size()));
    for (auto [u, v] : edges_)
        if (id[u] >= 0 && id[v] >= 0) out.add_edge(id[u], id[v]);
    return out;
}

}  // namespace strongpoly
