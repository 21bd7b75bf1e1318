#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace oracle {

Matrix matrix_of(const strongpoly::WeightedGraph& h) {
    Matrix a = zero(h.n());
    for (int u = 0; u < h.n(); ++u)
        for (int v = 0; v < h.n(); ++v) a[u][v] = h.weight(u, v).to_mpq();
    return a;
}

Edges edges_of(const strongpoly::Multigraph& g) { return g.edges(); }

strongpoly::WeightedGraph graph_of(const Matrix& a) {
    int n = int(a.size());
    strongpoly::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (a[u][v] != 0) b.set(u, v, strongpoly::Rational(a[u][v]));
    return b.build();
}

Matrix zero(int n) { return Matrix(std::size_t(n), std::vector<mpq_class>(std::size_t(n), mpq_class(0))); }

Matrix complete(int n, const mpq_class& loop) {
    Matrix a = zero(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) a[u][v] = u == v ? loop : mpq_class(1);
    return a;
}

Matrix coclique(int n) { return zero(n); }

void link(Matrix& a, int u, int v, const mpq_class& w) {
    a[u][v] = w;
    a[v][u] = w;
}

mpq_class hom(int n, const Edges& g, const Matrix& h) {
    int m = int(h.size());
    if (n == 0) return 1;
    if (m == 0) return 0;
    std::vector<int> f(std::size_t(n), 0);
    mpq_class total = 0;
    while (true) {
        mpq_class p = 1;
        for (auto [u, v] : g) {
            p *= h[f[u]][f[v]];
            if (p == 0) break;
        }
        total += p;
        int i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) break;
    }
    return total;
}

long long proper_colourings(int n, const Edges& g, int k) {
    if (n == 0) return 1;
    if (k == 0) return 0;
    std::vector<int> c(std::size_t(n), 0);
    long long count = 0;
    while (true) {
        bool ok = true;
        for (auto [u, v] : g) ok = ok && c[u] != c[v];
        count += ok;
        int i = 0;
        while (i < n && ++c[i] == k) c[i++] = 0;
        if (i == n) break;
    }
    return count;
}

namespace {

int rank_of(int n, const Edges& g, unsigned mask) {
    std::vector<int> up(static_cast<std::size_t>(n));
    std::iota(up.begin(), up.end(), 0);
    std::function<int(int)> find = [&](int x) { return up[x] == x ? x : up[x] = find(up[x]); };
    int r = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        int a = find(g[i].first), b = find(g[i].second);
        if (a != b) {
            up[a] = b;
            ++r;
        }
    }
    return r;
}

mpq_class power(const mpq_class& b, int e) {
    mpq_class r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

mpq_class tutte(int n, const Edges& g, const mpq_class& x, const mpq_class& y) {
    unsigned all = (1u << g.size()) - 1;
    int full = rank_of(n, g, all);
    mpq_class total = 0;
    for (unsigned a = 0; a <= all; ++a) {
        int r = rank_of(n, g, a);
        total += power(x - 1, full - r) * power(y - 1, __builtin_popcount(a) - r);
    }
    return total;
}

long long nowhere_zero_flows(int n, const Edges& g, int k) {
    std::size_t m = g.size();
    std::vector<int> f(m, 1);
    long long count = 0;
    if (m == 0) return 1;
    if (k < 2) return 0;
    while (true) {
        std::vector<int> net(std::size_t(n), 0);
        for (std::size_t i = 0; i < m; ++i) {
            net[g[i].first] = (net[g[i].first] + f[i]) % k;
            net[g[i].second] = (net[g[i].second] - f[i] + k) % k;
        }
        count += std::all_of(net.begin(), net.end(), [](int x) { return x == 0; });
        std::size_t i = 0;
        while (i < m && ++f[i] == k) f[i++] = 1;
        if (i == m) break;
    }
    return count;
}

bool isomorphic(const Matrix& a, const Matrix& b) {
    int n = int(a.size());
    if (int(b.size()) != n) return false;
    auto profile = [](const Matrix& x, int v) {
        std::vector<mpq_class> row(x[v].begin(), x[v].end());
        row.erase(row.begin() + v);
        std::sort(row.begin(), row.end());
        row.push_back(x[v][v]);
        return row;
    };
    std::vector<int> map(std::size_t(n), -1);
    std::vector<bool> used(std::size_t(n), false);
    std::function<bool(int)> extend = [&](int v) {
        if (v == n) return true;
        auto pa = profile(a, v);
        for (int w = 0; w < n; ++w) {
            if (used[w] || profile(b, w) != pa) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = a[u][v] == b[map[u]][w];
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (extend(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return extend(0);
}

int unlabelled_graph_count(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<unsigned> classes;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::iota(perm.begin(), perm.end(), 0);
        unsigned best = ~0u;
        do {
            unsigned img = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (!(mask >> i & 1u)) continue;
                int a = std::min(perm[pairs[i].first], perm[pairs[i].second]);
                int b = std::max(perm[pairs[i].first], perm[pairs[i].second]);
                auto at = std::find(pairs.begin(), pairs.end(), std::pair(a, b));
                img |= 1u << (at - pairs.begin());
            }
            best = std::min(best, img);
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return int(classes.size());
}

namespace {

std::vector<std::vector<int>> children_of(const std::vector<int>& parent) {
    std::vector<std::vector<int>> ch(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (parent[i] >= 0) ch[std::size_t(parent[i])].push_back(int(i));
    return ch;
}

std::string shape(const std::vector<std::vector<int>>& ch, int s) {
    std::vector<std::string> parts;
    for (int c : ch[s]) parts.push_back(shape(ch, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    return out + ")";
}

}  // namespace

std::vector<std::vector<int>> rooted_trees(int n) {
    std::vector<std::vector<int>> out;
    std::set<std::string> seen;
    std::vector<int> parent(std::size_t(n), -1);
    std::function<void(int)> grow = [&](int i) {
        if (i == n) {
            if (seen.insert(shape(children_of(parent), 0)).second) out.push_back(parent);
            return;
        }
        for (int p = 0; p < i; ++p) {
            parent[i] = p;
            grow(i + 1);
        }
    };
    if (n > 0) grow(1);
    return out;
}

Matrix branched_cotree(const std::vector<CoNode>& t) {
    std::vector<int> parent;
    for (const auto& x : t) parent.push_back(x.parent);
    auto ch = children_of(parent);
    std::function<Matrix(int)> build = [&](int s) {
        if (t[s].label < 0) return zero(1);
        std::vector<Matrix> parts;
        for (int c : ch[s]) {
            Matrix g = build(c);
            for (int i = 0; i < t[c].mult; ++i) parts.push_back(g);
        }
        int n = 0;
        for (const auto& p : parts) n += int(p.size());
        Matrix a = zero(n);
        int off = 0;
        for (const auto& p : parts) {
            int k = int(p.size());
            for (int u = 0; u < k; ++u)
                for (int v = 0; v < k; ++v) a[off + u][off + v] = p[u][v];
            if (t[s].label == 1)
                for (int u = 0; u < k; ++u)
                    for (int v = 0; v < n; ++v)
                        if (v < off || v >= off + k) link(a, off + u, v);
            off += k;
        }
        return a;
    };
    return build(0);
}

std::optional<int> gamma(const Matrix& h, int max_nodes) {
    int target_n = int(h.size());
    int target_m = 0;
    for (int u = 0; u < target_n; ++u)
        for (int v = u + 1; v < target_n; ++v) target_m += h[u][v] != 0;
    for (int size = 1; size <= max_nodes; ++size) {
        for (const auto& parent : rooted_trees(size)) {
            auto ch = children_of(parent);
            std::vector<int> internal;
            for (int s = 0; s < size; ++s)
                if (!ch[s].empty()) internal.push_back(s);
            std::vector<CoNode> t(static_cast<std::size_t>(size));
            for (int s = 0; s < size; ++s) t[s] = {parent[s], ch[s].empty() ? -1 : 0, 1};
            for (unsigned labels = 0; labels < (1u << internal.size()); ++labels) {
                for (std::size_t i = 0; i < internal.size(); ++i) t[internal[i]].label = int(labels >> i & 1u);
                // odometer over the multiplicities of non-root nodes
                for (int s = 1; s < size; ++s) t[s].mult = 1;
                while (true) {
                    std::function<long long(int)> leaves = [&](int s) -> long long {
                        if (ch[s].empty()) return 1;
                        long long sum = 0;
                        for (int c : ch[s]) sum += t[c].mult * leaves(c);
                        return sum;
                    };
                    if (leaves(0) == target_n) {
                        Matrix g = branched_cotree(t);
                        int m = 0;
                        for (int u = 0; u < target_n; ++u)
                            for (int v = u + 1; v < target_n; ++v) m += g[u][v] != 0;
                        if (m == target_m && isomorphic(g, h)) return size;
                    }
                    int s = 1;
                    while (s < size && ++t[s].mult > target_n) t[s++].mult = 1;
                    if (s >= size) break;
                }
            }
        }
    }
    return std::nullopt;
}

int min_bc(const Matrix& h) {
    int n = int(h.size());
    int best = n + 1;
    std::vector<int> parent(std::size_t(n), -1);
    std::function<void(int)> choose = [&](int i) {
        if (i < n) {
            for (int p = -1; p < n; ++p) {
                if (p == i) continue;
                parent[i] = p;
                choose(i + 1);
            }
            return;
        }
        if (std::count(parent.begin(), parent.end(), -1) != 1) return;
        std::vector<int> level(std::size_t(n), -1);
        for (int v = 0; v < n; ++v) {
            int d = 0;
            for (int x = v; parent[x] >= 0; x = parent[x])
                if (++d > n) return;  // cycle
            level[v] = d;
        }
        auto ancestor = [&](int a, int d) {
            for (int x = d; x >= 0; x = parent[x])
                if (x == a) return true;
            return false;
        };
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (h[u][v] != 0 && !ancestor(u, v) && !ancestor(v, u)) return;
        auto ch = children_of(parent);
        int root = int(std::find(parent.begin(), parent.end(), -1) - parent.begin());
        // string of the merged subtree (own multiplicity left out) and its size
        std::function<std::pair<std::string, int>(int)> core = [&](int s) {
            std::string colour = "[";
            for (int x = parent[s]; x >= 0; x = parent[x])
                if (h[s][x] != 0) colour += std::to_string(level[x]) + ",";
            colour += "]";
            std::map<std::string, std::pair<int, int>> groups;  // string -> (count, size)
            for (int c : ch[s]) {
                auto [str, sz] = core(c);
                auto& g = groups[str];
                g.first += 1;
                g.second = sz;
            }
            std::string out = colour + "{";
            int size = 1;
            for (const auto& [str, g] : groups) {
                out += str + "*" + std::to_string(g.first) + ";";
                size += g.second;
            }
            return std::pair(out + "}", size);
        };
        best = std::min(best, core(root).second);
    };
    choose(0);
    return best;
}

Matrix branched_composition(const std::vector<TreeNode>& t, const std::vector<Matrix>& ornaments) {
    std::vector<int> parent;
    for (const auto& x : t) parent.push_back(x.parent);
    auto ch = children_of(parent);
    struct Copy {
        int origin;
        std::vector<int> chain;  // copies of the ancestors, root first
    };
    std::vector<Copy> copies;
    std::function<void(int, std::vector<int>)> expand = [&](int s, std::vector<int> chain) {
        int reps = t[s].parent < 0 ? 1 : t[s].mult;
        for (int r = 0; r < reps; ++r) {
            int id = int(copies.size());
            copies.push_back({s, chain});
            std::vector<int> next = chain;
            next.push_back(id);
            for (int c : ch[s]) expand(c, next);
        }
    };
    int root = int(std::find(parent.begin(), parent.end(), -1) - parent.begin());
    expand(root, {});
    std::vector<int> start;
    int n = 0;
    for (const auto& c : copies) {
        start.push_back(n);
        n += int(ornaments[t[c.origin].ornament].size());
    }
    Matrix a = zero(n);
    for (std::size_t i = 0; i < copies.size(); ++i) {
        const Matrix& f = ornaments[t[copies[i].origin].ornament];
        int k = int(f.size());
        for (int u = 0; u < k; ++u)
            for (int v = 0; v < k; ++v) a[start[i] + u][start[i] + v] = f[u][v];
        for (int lvl : t[copies[i].origin].A) {
            int anc = copies[i].chain[lvl];
            int ka = int(ornaments[t[copies[anc].origin].ornament].size());
            for (int u = 0; u < k; ++u)
                for (int v = 0; v < ka; ++v) link(a, start[i] + u, start[anc] + v);
        }
    }
    return a;
}

}  // namespace oracle
