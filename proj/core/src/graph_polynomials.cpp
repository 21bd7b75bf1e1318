#include "strongpoly/graph_polynomials.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "strongpoly/canonical.hpp"
#include "strongpoly/errors.hpp"
#include "strongpoly/families.hpp"

namespace strongpoly {

namespace {

using Coeffs = std::vector<Rational>;  // index = power of k

Coeffs mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Coeffs sub(Coeffs a, const Coeffs& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

Coeffs linear(std::int64_t shift) { return {Rational(-shift), Rational(1)}; }  // k - shift

// Simple graph on vertices 0..n-1 as adjacency bitmasks.
struct SimpleGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    int edges() const {
        int m = 0;
        for (auto a : adj) m += std::popcount(a);
        return m / 2;
    }
    SimpleGraph without(int v) const {
        SimpleGraph g;
        g.n = n - 1;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            std::uint64_t a = adj[u];
            std::uint64_t low = a & ((std::uint64_t(1) << v) - 1);
            std::uint64_t high = (a >> (v + 1)) << v;
            g.adj.push_back(low | high);
        }
        return g;
    }
    std::string key() const {
        if (n <= kDefaultCanonicalCap) {
            GraphBuilder b(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (adj[u] >> v & 1) b.set(u, v, 1);
            return canonical_form(b.build()).key;
        }
        std::string s = "L" + std::to_string(n) + ":";
        for (auto a : adj) s += std::to_string(a) + ",";
        return s;
    }
};

struct Chromatic {
    std::map<std::string, Coeffs> memo;

    Coeffs run(SimpleGraph g) {
        // strip isolated vertices
        int iso = 0;
        for (int v = g.n - 1; v >= 0; --v)
            if (g.adj[v] == 0) {
                g = g.without(v);
                ++iso;
            }
        Coeffs k_pow(std::size_t(iso) + 1);
        k_pow[iso] = 1;
        if (g.n == 0) return k_pow;

        // connected pieces
        std::uint64_t all = (g.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.n) - 1);
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.adj[std::countr_zero(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != all) {
            std::vector<int> in, out;
            for (int v = 0; v < g.n; ++v) (seen >> v & 1 ? in : out).push_back(v);
            return mul(k_pow, mul(run(induced(g, in)), run(induced(g, out))));
        }
        return mul(k_pow, connected(g));
    }

    static SimpleGraph induced(const SimpleGraph& g, const std::vector<int>& vs) {
        SimpleGraph h;
        h.n = int(vs.size());
        for (int u : vs) {
            std::uint64_t a = 0;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (g.adj[u] >> vs[i] & 1) a |= std::uint64_t(1) << i;
            h.adj.push_back(a);
        }
        return h;
    }

    Coeffs connected(const SimpleGraph& g) {
        int n = g.n, m = g.edges();
        if (m == n - 1) {  // tree: k (k-1)^(n-1)
            Coeffs p{Rational(0), Rational(1)};
            for (int i = 1; i < n; ++i) p = mul(p, linear(1));
            return p;
        }
        if (m == n * (n - 1) / 2) {  // complete
            Coeffs p{Rational(1)};
            for (int i = 0; i < n; ++i) p = mul(p, linear(i));
            return p;
        }
        std::string key = g.key();
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        // edge between a max-degree vertex and a neighbour
        int u = 0;
        for (int v = 1; v < n; ++v)
            if (std::popcount(g.adj[v]) > std::popcount(g.adj[u])) u = v;
        int w = std::countr_zero(g.adj[u]);
        SimpleGraph del = g;
        del.adj[u] &= ~(std::uint64_t(1) << w);
        del.adj[w] &= ~(std::uint64_t(1) << u);
        SimpleGraph con = del;
        std::uint64_t moved = con.adj[w];
        con.adj[u] |= moved;
        for (std::uint64_t f = moved; f; f &= f - 1) con.adj[std::countr_zero(f)] |= std::uint64_t(1) << u;
        con.adj[u] &= ~(std::uint64_t(1) << u);
        for (int v = 0; v < n; ++v) con.adj[v] &= ~(std::uint64_t(1) << w);
        con.adj[w] = 0;
        con = con.without(w);
        Coeffs result = sub(run(del), run(con));
        memo.emplace(std::move(key), result);
        return result;
    }
};

// ---------------------------------------------------------------------------

struct Tutte {
    std::map<std::string, MultiPoly> memo;
    const std::vector<std::string> vars{"x", "y"};

    MultiPoly x() const { return MultiPoly::variable(vars, 0); }
    MultiPoly y() const { return MultiPoly::variable(vars, 1); }

    static std::string key(const Multigraph& g) {
        if (g.n() <= kDefaultCanonicalCap) return canonical_key(g);
        auto es = g.edges();
        std::sort(es.begin(), es.end());
        std::string s = "L" + std::to_string(g.n()) + ":";
        for (auto [u, v] : es) s += std::to_string(u) + "-" + std::to_string(v) + ",";
        return s;
    }

    // Drop isolated vertices so equal graphs share memo entries.
    static Multigraph compact(const Multigraph& g) {
        std::vector<int> deg(g.n(), 0);
        for (auto [u, v] : g.edges()) {
            ++deg[u];
            ++deg[v];
        }
        std::vector<int> keep;
        for (int v = 0; v < g.n(); ++v)
            if (deg[v]) keep.push_back(v);
        return g.induced(keep);
    }

    MultiPoly run(const Multigraph& g0) {
        Multigraph g = compact(g0);
        if (g.m() == 0) return MultiPoly::constant(vars, 1);
        std::size_t loops = g.loop_count();
        if (loops) {
            std::vector<bool> rm(g.m());
            for (std::size_t i = 0; i < g.m(); ++i) rm[i] = g.edges()[i].first == g.edges()[i].second;
            MultiPoly p = run(g.delete_edges(rm));
            for (std::size_t i = 0; i < loops; ++i) p = p * y();
            return p;
        }
        std::string k = key(g);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        std::vector<bool> none(g.m(), false), e0(g.m(), false);
        e0[0] = true;
        Multigraph del = g.delete_edges(e0);
        Multigraph con = g.minor(e0, none);
        MultiPoly result;
        if (del.component_count() > g.component_count())
            result = x() * run(con);
        else
            result = run(del) + run(con);
        memo.emplace(std::move(k), result);
        return result;
    }
};

}  // namespace

MultiPoly chromatic_poly(const Multigraph& g) {
    if (g.m() > 20) throw ResourceError("chromatic polynomial limited to 20 edges");
    MultiPoly out({"k"});
    if (g.loop_count()) return out;
    SimpleGraph s;
    s.n = g.n();
    if (s.n > 64) throw ResourceError("chromatic polynomial limited to 64 vertices");
    s.adj.assign(s.n, 0);
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= std::uint64_t(1) << v;
        s.adj[v] |= std::uint64_t(1) << u;
    }
    Chromatic c;
    Coeffs p = c.run(s);
    for (std::size_t i = 0; i < p.size(); ++i) out.add_term({int(i)}, p[i]);
    return out;
}

MultiPoly tutte_poly(const Multigraph& g) {
    if (g.m() > 16) throw ResourceError("Tutte polynomial limited to 16 edges");
    Tutte t;
    return t.run(g);
}

Rational tutte_hom_formula(const Multigraph& g, std::int64_t k, const Rational& l) {
    if (l == Rational(1)) throw DomainError("the Tutte formula needs l != 1");
    Rational lm1 = l - 1;
    Rational xv = (lm1 + k) / lm1;
    Rational t = tutte_poly(g).evaluate(std::vector<Rational>{xv, l});
    return Rational(k).pow(g.component_count()) * lm1.pow(g.rank()) * t;
}

Rational flow_polynomial_value(const Multigraph& g, std::int64_t k) {
    Rational t = tutte_poly(g).evaluate(std::vector<Rational>{Rational(0), Rational(1 - k)});
    return g.nullity() % 2 ? -t : t;
}

bool flow_count_check(const Multigraph& g, std::int64_t k, const HomOptions& opt) {
    FamilyId f{FamilyKind::LoopedComplete, Rational(1 - k), 1, {}};
    std::int64_t kk = k;
    Rational lhs = hom(g, generate(f, std::span<const std::int64_t>(&kk, 1)), opt);
    Rational rhs = Rational(k).pow(std::uint64_t(g.n())) * flow_polynomial_value(g, k);
    if (g.m() % 2) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace strongpoly
