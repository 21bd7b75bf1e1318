#include "strongpoly/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

struct Search {
    const WeightedGraph& g;
    std::span<const int> colours;
    std::optional<std::string> best;
    std::vector<int> best_cells;

    // Refine `cell` (cell index per vertex, indices dense and ordered) until stable.
    void refine(std::vector<int>& cell) const {
        int n = g.n();
        std::vector<std::vector<std::pair<int, Rational>>> sig(n);
        while (true) {
            int before = 1 + *std::max_element(cell.begin(), cell.end());
            for (int v = 0; v < n; ++v) {
                sig[v].clear();
                for (const auto& nb : g.row(v))
                    if (nb.to != v) sig[v].emplace_back(cell[nb.to], nb.w);
                std::sort(sig[v].begin(), sig[v].end());
            }
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                if (cell[a] != cell[b]) return cell[a] < cell[b];
                return sig[a] < sig[b];
            });
            std::vector<int> next(n);
            int c = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0) {
                    int a = order[i - 1], b = order[i];
                    if (cell[a] != cell[b] || sig[a] != sig[b]) ++c;
                }
                next[order[i]] = c;
            }
            cell = std::move(next);
            if (c + 1 == before) return;
        }
    }

    std::string certificate(const std::vector<int>& pos) const {
        int n = g.n();
        std::vector<int> at(n);
        for (int v = 0; v < n; ++v) at[pos[v]] = v;
        std::string key = std::to_string(n) + "|";
        if (!colours.empty())
            for (int i = 0; i < n; ++i) key += std::to_string(colours[at[i]]) + ",";
        key += "|";
        std::vector<std::pair<int, const Rational*>> row;
        for (int i = 0; i < n; ++i) {
            row.clear();
            for (const auto& nb : g.row(at[i]))
                if (pos[nb.to] >= i) row.emplace_back(pos[nb.to], &nb.w);
            std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
            for (auto& [j, w] : row) key += std::to_string(i) + "-" + std::to_string(j) + ":" + w->str() + ";";
        }
        return key;
    }

    bool twins(int x, int y) const {
        if (g.loop(x) != g.loop(y)) return false;
        auto rx = g.row(x), ry = g.row(y);
        auto ix = rx.begin(), iy = ry.begin();
        auto skip = [&](auto& it, auto end) {
            while (it != end && (it->to == x || it->to == y)) ++it;
        };
        while (true) {
            skip(ix, rx.end());
            skip(iy, ry.end());
            if (ix == rx.end() || iy == ry.end()) return ix == rx.end() && iy == ry.end();
            if (ix->to != iy->to || ix->w != iy->w) return false;
            ++ix;
            ++iy;
        }
    }

    void run(std::vector<int> cell) {
        refine(cell);
        int n = g.n();
        int cells = n ? 1 + *std::max_element(cell.begin(), cell.end()) : 0;
        if (cells == n) {
            std::string key = certificate(cell);
            if (!best || key < *best) {
                best = std::move(key);
                best_cells = cell;
            }
            return;
        }
        std::vector<int> size(cells, 0);
        for (int c : cell) ++size[c];
        int target = int(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (cell[v] != target) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
            tried.push_back(v);
            std::vector<int> split(cell);
            for (int u = 0; u < n; ++u)
                if (split[u] > target || (split[u] == target && u != v)) ++split[u];
            run(std::move(split));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const WeightedGraph& h, std::span<const int> colours, int cap) {
    if (h.n() > cap)
        throw ResourceError("canonical form limited to " + std::to_string(cap) + " vertices, got " +
                            std::to_string(h.n()));
    if (!colours.empty() && int(colours.size()) != h.n()) throw DomainError("colour vector size mismatch");
    int n = h.n();
    // initial cells ordered by (colour, loop weight)
    std::vector<std::pair<int, Rational>> init(n);
    for (int v = 0; v < n; ++v) init[v] = {colours.empty() ? 0 : colours[v], h.loop(v)};
    std::vector<std::pair<int, Rational>> distinct(init);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> cell(n);
    for (int v = 0; v < n; ++v)
        cell[v] = int(std::lower_bound(distinct.begin(), distinct.end(), init[v]) - distinct.begin());

    Search s{h, colours, std::nullopt, {}};
    if (n == 0) return {s.certificate({}), {}};
    s.run(std::move(cell));
    return {*s.best, s.best_cells};
}

CanonicalForm canonical_form(const WeightedGraph& h, int cap) { return canonical_form(h, {}, cap); }

bool is_isomorphic(const WeightedGraph& a, const WeightedGraph& b, int cap) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, cap).key == canonical_form(b, cap).key;
}

std::string canonical_key(const Multigraph& g, int cap) { return canonical_form(g.to_weighted(), cap).key; }

}  // namespace strongpoly
