#include "enumerate.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <map>
#include <string>

#include "strongpoly/canonical.hpp"
#include "strongpoly/coloured_tree.hpp"

namespace strongpoly::suite {

namespace {

// Deduplicates by canonical key and returns the survivors ordered by (n, m, key).
class ClassSet {
public:
    void add(const Multigraph& g) {
        std::string key = canonical_key(g);
        seen_.emplace(std::make_tuple(g.n(), g.m(), std::move(key)), g);
    }
    std::vector<Multigraph> take() const {
        std::vector<Multigraph> out;
        for (const auto& [k, g] : seen_) out.push_back(g);
        return out;
    }

private:
    std::map<std::tuple<int, std::size_t, std::string>, Multigraph> seen_;
};

}  // namespace

std::vector<Multigraph> simple_graphs(int max_n, int max_m) {
    ClassSet set;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            if (std::popcount(mask) > max_m) continue;
            Multigraph g(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
            set.add(g);
        }
    }
    return set.take();
}

std::vector<Multigraph> connected_graphs(int max_n) {
    std::vector<Multigraph> out;
    int max_m = max_n * (max_n - 1) / 2;
    for (auto& g : simple_graphs(max_n, max_m))
        if (g.component_count() == 1) out.push_back(std::move(g));
    return out;
}

std::vector<Multigraph> multigraphs(int max_m) {
    std::vector<Multigraph> layer{Multigraph(0)};
    std::vector<Multigraph> out;
    for (int m = 1; m <= max_m; ++m) {
        ClassSet next;
        for (const auto& g : layer) {
            int n = g.n();
            // endpoints among the old vertices plus up to two new ones
            for (int u = 0; u <= n; ++u)
                for (int v = u; v <= n + 1; ++v) {
                    if (v == n + 1 && u != n) continue;  // new vertices are taken in order
                    int size = std::max({n, u + 1, v + 1});
                    Multigraph h(size, g.edges());
                    h.add_edge(u, v);
                    next.add(h);
                }
        }
        layer = next.take();
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<ParentArray> rooted_trees(int max_nodes) {
    std::map<std::pair<int, std::string>, ParentArray> seen;
    for (int n = 1; n <= max_nodes; ++n) {
        ParentArray p(n);
        std::vector<int> choice(n, 0);
        while (true) {
            std::vector<TreeNode> nodes(n);
            for (int i = 1; i < n; ++i) nodes[i].parent = choice[i];
            ColouredRootedTree t(nodes);
            ParentArray par(n);
            for (int i = 1; i < n; ++i) par[i] = choice[i];
            seen.emplace(std::make_pair(n, canonical_string(t)), par);
            int i = n - 1;
            while (i >= 1 && choice[i] == i - 1) choice[i--] = 0;
            if (i < 1) break;
            ++choice[i];
        }
    }
    std::vector<ParentArray> out;
    for (auto& [k, p] : seen) out.push_back(p);
    return out;
}

}  // namespace strongpoly::suite
