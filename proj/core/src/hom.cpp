#include "strongpoly/hom.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t entry_hash(int to, const Rational& w) {
    return splitmix(std::uint64_t(to) * 0x100000001B3ULL ^ std::uint64_t(w.hash()));
}

using Row = std::vector<std::pair<int, Rational>>;

bool rows_equal_except(const Row& a, const Row& b, int x, int y) {
    auto ia = a.begin(), ib = b.begin();
    auto skip = [&](auto& it, auto end) {
        while (it != end && (it->first == x || it->first == y)) ++it;
    };
    while (true) {
        skip(ia, a.end());
        skip(ib, b.end());
        if (ia == a.end() || ib == b.end()) return ia == a.end() && ib == b.end();
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
}

const Rational* find_in_row(const Row& r, int v) {
    auto it = std::lower_bound(r.begin(), r.end(), v, [](const auto& e, int t) { return e.first < t; });
    return (it != r.end() && it->first == v) ? &it->second : nullptr;
}

}  // namespace

CompiledTarget::CompiledTarget(WeightedGraph h) : h_(std::move(h)) {
    int n = h_.n();
    integral_ = h_.has_integer_weights();
    std::vector<Row> rows(n);
    for (int v = 0; v < n; ++v)
        for (const auto& nb : h_.row(v))
            if (nb.to != v) rows[v].emplace_back(nb.to, nb.w);
    std::vector<int> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    std::vector<char> dropped(n, 0);
    std::vector<std::uint64_t> hash(n, 0);

    while (alive.size() > 1) {
        for (int v : alive) {
            std::uint64_t s = 0;
            for (const auto& [to, w] : rows[v]) s += entry_hash(to, w);
            hash[v] = s;
        }
        std::vector<char> used(n, 0);
        std::size_t merged_before = merges_.size();

        // false twins: identical rows, hence not adjacent
        std::vector<int> order(alive);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return hash[a] != hash[b] ? hash[a] < hash[b] : a < b;
        });
        for (std::size_t i = 0; i < order.size();) {
            std::size_t j = i;
            while (j < order.size() && hash[order[j]] == hash[order[i]]) ++j;
            for (std::size_t a = i; a < j; ++a) {
                int keep = order[a];
                if (used[keep]) continue;
                for (std::size_t b = a + 1; b < j; ++b) {
                    int other = order[b];
                    if (used[other] || rows[keep] != rows[other]) continue;
                    if (!used[keep]) used[keep] = 1;
                    used[other] = 1;
                    merges_.push_back({keep, other, Rational()});
                }
            }
            i = j;
        }

        // true twins: adjacent with weight mu, rows agree outside the pair
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<int> touched;
        for (int u : alive) {
            if (used[u]) continue;
            for (const auto& [v, w] : rows[u]) {
                if (v <= u || used[v]) continue;
                if (hash[u] - entry_hash(v, w) != hash[v] - entry_hash(u, w)) continue;
                if (!rows_equal_except(rows[u], rows[v], u, v)) continue;
                int ru = find(u), rv = find(v);
                if (ru != rv) {
                    parent[std::max(ru, rv)] = std::min(ru, rv);
                    touched.push_back(u);
                    touched.push_back(v);
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int v : touched) {
            int r = find(v);
            if (r == v) continue;
            merges_.push_back({r, v, *find_in_row(rows[r], v)});
            used[v] = 1;
        }

        if (merges_.size() == merged_before) break;
        for (std::size_t i = merged_before; i < merges_.size(); ++i) dropped[merges_[i].drop] = 1;
        std::vector<int> next;
        for (int v : alive)
            if (!dropped[v]) next.push_back(v);
        alive = std::move(next);
        for (int v : alive) {
            Row r;
            r.reserve(rows[v].size());
            for (auto& e : rows[v])
                if (!dropped[e.first]) r.push_back(std::move(e));
            rows[v] = std::move(r);
        }
    }

    reps_ = alive;
    std::vector<int> index(n, -1);
    for (std::size_t i = 0; i < reps_.size(); ++i) index[reps_[i]] = int(i);
    rows_.resize(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
        for (auto& [to, w] : rows[reps_[i]]) rows_[i].emplace_back(index[to], w);
    for (auto& r : rows_) std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
}

// ---------------------------------------------------------------------------

namespace {

struct Overflow {};

struct Checked {
    __int128 v = 0;

    Checked() = default;
    Checked(__int128 x) : v(x) {}
    static Checked from(const Rational& r) {
        auto k = r.to_int64();
        if (!k) throw Overflow{};
        return Checked(*k);
    }
    bool is_zero() const { return v == 0; }
    Checked& operator*=(const Checked& o) {
        if (__builtin_mul_overflow(v, o.v, &v)) throw Overflow{};
        return *this;
    }
    Checked& operator+=(const Checked& o) {
        if (__builtin_add_overflow(v, o.v, &v)) throw Overflow{};
        return *this;
    }
    friend Checked operator*(Checked a, const Checked& b) { return a *= b; }
    Rational to_rational() const {
        if (v >= INT64_MIN + 1 && v <= INT64_MAX) return Rational(std::int64_t(v));
        bool neg = v < 0;
        unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
        BigInt hi = static_cast<unsigned long>(std::uint64_t(u >> 64));
        BigInt lo = static_cast<unsigned long>(std::uint64_t(u));
        BigInt r = (hi << 64) + lo;
        return Rational(neg ? BigInt(-r) : r);
    }
};

struct Exact {
    Rational v;
    Exact() = default;
    Exact(int x) : v(x) {}
    Exact(Rational x) : v(std::move(x)) {}
    static Exact from(const Rational& r) { return Exact(r); }
    bool is_zero() const { return v.is_zero(); }
    Exact& operator*=(const Exact& o) {
        v *= o.v;
        return *this;
    }
    Exact& operator+=(const Exact& o) {
        v += o.v;
        return *this;
    }
    friend Exact operator*(Exact a, const Exact& b) { return a *= b; }
    Rational to_rational() const { return v; }
};

template <class Num>
Num power(const Num& b, int e) {
    Num r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

/// One connected component of G, vertices relabelled 0..k-1 in BFS order.
struct Component {
    int k = 0;
    int edges = 0;
    std::vector<int> loops;                                  // loops at x
    std::vector<std::vector<std::pair<int, int>>> earlier;   // (y < x, multiplicity)
    std::vector<int> parent;                                 // BFS parent, -1 for x = 0
    std::vector<std::vector<int>> mult;                      // full multiplicity matrix
};

std::vector<Component> split_components(const Multigraph& g) {
    std::vector<int> comp;
    int c = g.components(comp);
    std::vector<std::vector<int>> adj(g.n());
    for (auto [u, v] : g.edges())
        if (u != v) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    std::vector<Component> out(c);
    std::vector<int> local(g.n(), -1);
    std::vector<char> seen(g.n(), 0);
    std::vector<int> first(c, -1);
    for (int v = 0; v < g.n(); ++v)
        if (first[comp[v]] < 0) first[comp[v]] = v;
    for (int ci = 0; ci < c; ++ci) {
        Component& C = out[ci];
        std::vector<int> queue{first[ci]};
        seen[first[ci]] = 1;
        std::vector<int> par{-1};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            local[v] = int(i);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                    par.push_back(int(i));
                }
        }
        C.k = int(queue.size());
        C.parent = par;
        C.loops.assign(C.k, 0);
        C.mult.assign(C.k, std::vector<int>(C.k, 0));
        C.earlier.resize(C.k);
    }
    for (auto [u, v] : g.edges()) {
        Component& C = out[comp[u]];
        ++C.edges;
        int a = local[u], b = local[v];
        if (a == b) {
            ++C.loops[a];
            ++C.mult[a][a];
        } else {
            ++C.mult[a][b];
            ++C.mult[b][a];
        }
    }
    for (auto& C : out)
        for (int x = 0; x < C.k; ++x)
            for (int y = 0; y < x; ++y)
                if (C.mult[x][y]) C.earlier[x].emplace_back(y, C.mult[x][y]);
    return out;
}

template <class Num>
struct Enumerator {
    explicit Enumerator(const Component& c) : C(c) {}
    const Component& C;
    // target
    int n = 0;
    std::vector<std::vector<std::pair<int, Num>>> rows;
    // table mode: tables[s][mask]; plain mode: loop weight per vertex
    std::vector<std::shared_ptr<const std::vector<Num>>> tables;
    std::vector<Num> loop;
    bool table_mode = true;

    std::uint64_t budget = 0;
    std::uint64_t visited = 0;

    std::vector<int> f;
    std::vector<std::uint32_t> mask;
    std::vector<int> occupied;
    Num total{0};

    const Num* weight(int a, int b) const {
        const auto& r = rows[a];
        auto it = std::lower_bound(r.begin(), r.end(), b, [](const auto& e, int t) { return e.first < t; });
        return (it != r.end() && it->first == b) ? &it->second : nullptr;
    }

    void place(int x, int c, const Num& acc) {
        if (++visited > budget) throw ResourceError("hom enumeration exceeded budget");
        Num w = acc;
        if (!table_mode) {
            if (C.loops[x]) {
                w *= power(loop[c], C.loops[x]);
                if (w.is_zero()) return;
            }
        }
        for (auto [y, m] : C.earlier[x]) {
            int d = f[y];
            if (d == c) {
                if (!table_mode) {
                    w *= power(loop[c], m);
                    if (w.is_zero()) return;
                }
                continue;
            }
            const Num* a = weight(c, d);
            if (!a) return;
            w *= power(*a, m);
            if (w.is_zero()) return;
        }
        f[x] = c;
        bool fresh = false;
        if (table_mode) {
            fresh = mask[c] == 0;
            mask[c] |= 1u << x;
            if (fresh) occupied.push_back(c);
        }
        if (x + 1 == C.k) {
            if (table_mode)
                for (int s : occupied) {
                    w *= (*tables[s])[mask[s]];
                    if (w.is_zero()) break;
                }
            total += w;
        } else {
            step(x + 1, w);
        }
        if (table_mode) {
            if (fresh) occupied.pop_back();
            mask[c] &= ~(1u << x);
        }
        f[x] = -1;
    }

    void step(int x, const Num& acc) {
        if (x == 0) {
            for (int c = 0; c < n; ++c) place(0, c, acc);
            return;
        }
        int p = f[C.parent[x]];
        place(x, p, acc);
        for (const auto& [c, a] : rows[p])
            if (c != p) place(x, c, acc);
    }

    Num run() {
        f.assign(C.k, -1);
        mask.assign(n, 0);
        total = Num(0);
        if (C.k > 0) step(0, Num(1));
        return total;
    }
};

template <class Num>
std::vector<Num> merge_tables(const std::vector<Num>& tu, const std::vector<Num>& tv, const Num& mu,
                              const std::vector<int>& inside, int edges) {
    std::size_t size = tu.size();
    std::vector<Num> mu_pow(std::size_t(edges) + 1);
    mu_pow[0] = Num(1);
    for (int i = 1; i <= edges; ++i) mu_pow[i] = mu_pow[i - 1] * mu;
    std::vector<Num> out(size, Num(0));
    for (std::size_t s = 0; s < size; ++s) {
        Num acc(0);
        // enumerate submasks a of s, including s and 0
        for (std::size_t a = s;; a = (a - 1) & s) {
            std::size_t b = s ^ a;
            if (!tu[a].is_zero() && !tv[b].is_zero()) {
                int cross = inside[s] - inside[a] - inside[b];
                if (!mu_pow[cross].is_zero()) acc += tu[a] * tv[b] * mu_pow[cross];
            }
            if (a == 0) break;
        }
        out[s] = acc;
    }
    return out;
}

template <class Num>
Num hom_component(const Component& C, const CompiledTarget& t, const HomOptions& opt) {
    Enumerator<Num> e(C);
    e.budget = opt.budget;
    const WeightedGraph& h = t.target();
    e.table_mode = C.k <= opt.table_limit && C.k <= 31;
    if (e.table_mode) {
        std::size_t size = std::size_t(1) << C.k;
        std::vector<int> inside(size, 0);
        for (std::size_t s = 1; s < size; ++s) {
            int x = std::countr_zero(s);
            std::size_t rest = s & (s - 1);
            int add = C.mult[x][x];
            for (int y = 0; y < C.k; ++y)
                if (y != x && (rest >> y & 1)) add += C.mult[x][y];
            inside[s] = inside[rest] + add;
        }
        // base table per distinct loop weight: lambda^{e(S)}
        std::unordered_map<Rational, std::shared_ptr<const std::vector<Num>>> base;
        std::vector<std::shared_ptr<const std::vector<Num>>> table(h.n());
        for (int v = 0; v < h.n(); ++v) {
            Rational lam = h.loop(v);
            auto& slot = base[lam];
            if (!slot) {
                Num l = Num::from(lam);
                std::vector<Num> pw(std::size_t(C.edges) + 1);
                pw[0] = Num(1);
                for (int i = 1; i <= C.edges; ++i) pw[i] = pw[i - 1] * l;
                auto tb = std::make_shared<std::vector<Num>>(size);
                for (std::size_t s = 0; s < size; ++s) (*tb)[s] = pw[inside[s]];
                slot = tb;
            }
            table[v] = slot;
        }
        for (const auto& m : t.merges())
            table[m.keep] = std::make_shared<const std::vector<Num>>(
                merge_tables(*table[m.keep], *table[m.drop], Num::from(m.mu), inside, C.edges));
        const auto& reps = t.representatives();
        e.n = int(reps.size());
        e.tables.resize(e.n);
        e.rows.resize(e.n);
        for (int i = 0; i < e.n; ++i) {
            e.tables[i] = table[reps[i]];
            for (const auto& [to, w] : t.reduced_row(i)) e.rows[i].emplace_back(to, Num::from(w));
        }
    } else {
        e.n = h.n();
        e.rows.resize(e.n);
        e.loop.resize(e.n);
        for (int v = 0; v < e.n; ++v) {
            e.loop[v] = Num::from(h.loop(v));
            for (const auto& nb : h.row(v))
                if (nb.to != v) e.rows[v].emplace_back(nb.to, Num::from(nb.w));
        }
    }
    return e.run();
}

}  // namespace

Rational hom(const Multigraph& g, const CompiledTarget& t, const HomOptions& opt) {
    auto comps = split_components(g);
    // isomorphic components are common (isolated vertices in particular)
    Rational result = 1;
    for (const auto& C : comps) {
        Rational part;
        bool done = false;
        if (t.integral()) {
            try {
                part = hom_component<Checked>(C, t, opt).to_rational();
                done = true;
            } catch (const Overflow&) {
            }
        }
        if (!done) part = hom_component<Exact>(C, t, opt).to_rational();
        result *= part;
        if (result.is_zero()) break;
    }
    return result;
}

Rational hom(const Multigraph& g, const WeightedGraph& h, const HomOptions& opt) {
    return hom(g, CompiledTarget(h), opt);
}

Rational hom_by_definition(const Multigraph& g, const WeightedGraph& h, std::uint64_t budget) {
    int k = g.n(), n = h.n();
    if (k == 0) return 1;
    if (n == 0) return 0;
    double count = 1;
    for (int i = 0; i < k; ++i) count *= n;
    if (count > double(budget)) throw ResourceError("hom_by_definition exceeds budget");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (const auto& e : h.edges()) a[e.u][e.v] = a[e.v][e.u] = e.w;
    std::vector<int> f(k, 0);
    Rational total;
    while (true) {
        Rational term = 1;
        for (auto [u, v] : g.edges()) {
            term *= a[f[u]][f[v]];
            if (term.is_zero()) break;
        }
        total += term;
        int i = 0;
        while (i < k && ++f[i] == n) f[i++] = 0;
        if (i == k) break;
    }
    return total;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<char>> adjacency(const WeightedGraph& g) {
    std::vector<std::vector<char>> a(g.n(), std::vector<char>(g.n(), 0));
    for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

// Injective maps s -> g preserving edges (and non-edges when induced).
std::uint64_t embeddings(const WeightedGraph& s, const WeightedGraph& g, bool induced) {
    if (!s.is_simple() || !g.is_simple()) throw DomainError("subgraph counts need simple graphs");
    auto as = adjacency(s), ag = adjacency(g);
    int k = s.n(), n = g.n();
    std::vector<int> f(k, -1);
    std::vector<char> used(n, 0);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int x) -> void {
        if (x == k) {
            ++count;
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int y = 0; y < x && ok; ++y) {
                if (as[x][y] && !ag[c][f[y]]) ok = false;
                if (induced && !as[x][y] && ag[c][f[y]]) ok = false;
            }
            if (!ok) continue;
            used[c] = 1;
            f[x] = c;
            self(self, x + 1);
            used[c] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

BigInt sub_count(const WeightedGraph& s, const WeightedGraph& g) {
    std::uint64_t aut = embeddings(s, s, true);
    return BigInt(static_cast<unsigned long>(embeddings(s, g, false) / aut));
}

BigInt induced_count(const WeightedGraph& s, const WeightedGraph& g) {
    std::uint64_t aut = embeddings(s, s, true);
    return BigInt(static_cast<unsigned long>(embeddings(s, g, true) / aut));
}

BigInt sur_count(const Multigraph& g, const WeightedGraph& s, const HomOptions& opt) {
    if (!s.is_simple()) throw DomainError("sur_count needs a simple target");
    auto es = s.edges();
    int nv = s.n();
    int ne = int(es.size());
    if (nv > 20 || ne > 20) throw ResourceError("sur_count target too large");
    Rational total;
    for (std::uint32_t fm = 0; fm < (1u << ne); ++fm)
        for (std::uint32_t um = 0; um < (1u << nv); ++um) {
            std::vector<int> keep;
            for (int v = 0; v < nv; ++v)
                if (um >> v & 1) keep.push_back(v);
            std::vector<int> id(nv, -1);
            for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = int(i);
            GraphBuilder b(int(keep.size()));
            for (int i = 0; i < ne; ++i)
                if ((fm >> i & 1) && id[es[i].u] >= 0 && id[es[i].v] >= 0) b.set(id[es[i].u], id[es[i].v], 1);
            int sign_exp = (ne - std::popcount(fm)) + (nv - std::popcount(um));
            Rational h = hom(g, b.build(), opt);
            if (sign_exp & 1)
                total -= h;
            else
                total += h;
        }
    return total.numerator();
}

}  // namespace strongpoly
