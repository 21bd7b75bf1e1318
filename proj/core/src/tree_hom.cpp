#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>

#include "strongpoly/coloured_tree.hpp"
#include "strongpoly/cotree.hpp"
#include "strongpoly/errors.hpp"
#include "strongpoly/hom.hpp"

namespace strongpoly {

namespace {

using Mask = std::uint32_t;

constexpr int kMaxVertices = 12;

struct Masks {
    int n = 0;
    std::vector<Mask> nb;  // neighbours, self excluded
    Mask looped = 0;

    explicit Masks(const Multigraph& g) : n(g.n()), nb(std::size_t(g.n()), 0) {
        if (n > kMaxVertices) throw ResourceError("tree hom supports at most 12 vertices in G");
        for (auto [u, v] : g.edges()) {
            if (u == v) {
                looped |= Mask(1) << u;
            } else {
                nb[u] |= Mask(1) << v;
                nb[v] |= Mask(1) << u;
            }
        }
    }

    std::vector<Mask> components(Mask m) const {
        std::vector<Mask> out;
        while (m) {
            Mask comp = m & (~m + 1), frontier = comp;
            while (frontier) {
                int x = std::countr_zero(frontier);
                frontier &= frontier - 1;
                Mask fresh = nb[x] & m & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            out.push_back(comp);
            m &= ~comp;
        }
        return out;
    }

    bool independent(Mask m) const {
        if (m & looped) return false;
        for (Mask r = m; r; r &= r - 1)
            if (nb[std::countr_zero(r)] & m) return false;
        return true;
    }
};

// Sum over ways of cutting `parts` into blocks (unions of parts) and sending the
// blocks to distinct copies of the children: the i-th block sent to child t has
// mult(t) - i copies left. The block holding the lowest remaining part is taken first.
template <class Inner>
Rational spread(const std::vector<Mask>& parts, const std::vector<int>& kids,
                const std::vector<std::int64_t>& mult, const Inner& inner) {
    std::vector<std::int64_t> used(kids.size(), 0);
    auto rec = [&](auto&& self, std::uint32_t left) -> Rational {
        if (!left) return Rational(1);
        int first = std::countr_zero(left);
        std::uint32_t rest = left & ~(std::uint32_t(1) << first);
        Rational total;
        // every subset of the other remaining parts joins the first one
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t block = sub | (std::uint32_t(1) << first);
            Mask verts = 0;
            for (std::uint32_t b = block; b; b &= b - 1) verts |= parts[std::countr_zero(b)];
            for (std::size_t c = 0; c < kids.size(); ++c) {
                std::int64_t copies = mult[kids[c]] - used[c];
                if (copies <= 0) continue;
                Rational v = inner(kids[c], verts);
                if (v.is_zero()) continue;
                ++used[c];
                Rational tail = self(self, left & ~block);
                --used[c];
                if (!tail.is_zero()) total += Rational(copies) * v * tail;
            }
            if (sub == 0) break;
        }
        return total;
    };
    if (parts.size() > 31) throw ResourceError("too many parts");
    return rec(rec, parts.empty() ? 0 : std::uint32_t((std::uint64_t(1) << parts.size()) - 1));
}

std::vector<Mask> singletons(Mask m) {
    std::vector<Mask> out;
    for (; m; m &= m - 1) out.push_back(m & (~m + 1));
    return out;
}

class BranchedHom {
public:
    BranchedHom(const Multigraph& g, const ColouredRootedTree& t, const OrnamentTable& table, const HomOptions& opt)
        : g_(g), m_(g), t_(t), opt_(opt), mult_(std::size_t(t.size())), amask_(std::size_t(t.size()), 0) {
        for (int s = 0; s < t.size(); ++s) {
            mult_[s] = t.node(s).mult;
            for (int a : t.node(s).A) amask_[s] |= std::uint64_t(1) << a;
            if (t.level(s) >= 15) throw ResourceError("tree hom supports trees of height at most 15");
            const auto& label = t.node(s).ornament;
            auto it = table.find(label);
            if (it == table.end()) throw DomainError("no ornament bound to label '" + label + "'");
            auto [pos, fresh] = orn_index_.emplace(label, int(orn_.size()));
            if (fresh) orn_.push_back({&it->second, std::vector<std::optional<Rational>>(std::size_t(1) << m_.n)});
            orn_of_.push_back(pos->second);
        }
    }

    Rational run() {
        Mask all = m_.n == 0 ? 0 : Mask((std::uint64_t(1) << m_.n) - 1);
        return f(t_.root(), all, ~std::uint64_t(0));
    }

private:
    struct Orn {
        const WeightedGraph* graph;
        std::vector<std::optional<Rational>> hom;  // per subset of V(G)
    };

    static int level_of(std::uint64_t levels, int x) { return int(levels >> (4 * x) & 0xF); }

    const Rational& orn_hom(int s, Mask x) {
        auto& o = orn_[orn_of_[s]];
        auto& slot = o.hom[x];
        if (!slot) {
            std::vector<int> vs;
            for (Mask r = x; r; r &= r - 1) vs.push_back(std::countr_zero(r));
            Multigraph sub = g_.induced(vs);
            // tiny cases are cheaper summed directly than through a compiled target
            double maps = std::pow(double(o.graph->n()), double(vs.size()));
            slot = maps <= 4096 ? hom_by_definition(sub, *o.graph, opt_.budget) : hom(sub, *o.graph, opt_);
        }
        return *slot;
    }

    // Weighted count of maps of W into one copy of B(s); `levels` holds, 4 bits per
    // vertex, the level of the ancestor copy each placed vertex sits in (0xF: not placed).
    Rational f(int s, Mask w, std::uint64_t levels) {
        if (!w) return Rational(1);
        std::uint64_t key_levels = ~std::uint64_t(0);
        Mask outside = 0;
        for (Mask r = w; r; r &= r - 1) outside |= m_.nb[std::countr_zero(r)];
        outside &= ~w;
        for (Mask r = outside; r; r &= r - 1) {
            int y = std::countr_zero(r);
            key_levels &= ~(std::uint64_t(0xF) << (4 * y));
            key_levels |= std::uint64_t(level_of(levels, y)) << (4 * y);
        }
        auto key = std::make_tuple(s, w, key_levels);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Rational total;
        int lev = t_.level(s);
        const auto& kids = t_.children(s);
        for (Mask x = w;; x = (x - 1) & w) {
            bool ok = true;
            for (Mask r = x; r && ok; r &= r - 1) {
                Mask out = m_.nb[std::countr_zero(r)] & ~w;
                for (Mask q = out; q; q &= q - 1) {
                    int l = level_of(key_levels, std::countr_zero(q));
                    if (l == 0xF || !(amask_[s] >> l & 1)) {
                        ok = false;
                        break;
                    }
                }
            }
            Mask rest = w & ~x;
            if (ok && (!rest || !kids.empty())) {
                Rational here = orn_hom(s, x);
                if (!here.is_zero()) {
                    std::uint64_t next = key_levels;
                    for (Mask r = x; r; r &= r - 1) {
                        int v = std::countr_zero(r);
                        next &= ~(std::uint64_t(0xF) << (4 * v));
                        next |= std::uint64_t(lev) << (4 * v);
                    }
                    Rational below = spread(m_.components(rest), kids, mult_,
                                            [&](int c, Mask block) { return f(c, block, next); });
                    if (!below.is_zero()) total += here * below;
                }
            }
            if (x == 0) break;
        }
        memo_.emplace(key, total);
        return total;
    }

    const Multigraph& g_;
    Masks m_;
    const ColouredRootedTree& t_;
    HomOptions opt_;
    std::vector<std::int64_t> mult_;
    std::vector<std::uint64_t> amask_;
    std::map<std::string, int> orn_index_;
    std::vector<Orn> orn_;
    std::vector<int> orn_of_;
    std::map<std::tuple<int, Mask, std::uint64_t>, Rational> memo_;
};

class CotreeHom {
public:
    CotreeHom(const Multigraph& g, const Cotree& t) : m_(g), t_(t), mult_(std::size_t(t.size())) {
        for (int s = 0; s < t.size(); ++s) mult_[s] = t.node(s).mult;
    }

    Rational run() { return f(t_.root(), m_.n == 0 ? 0 : Mask((std::uint64_t(1) << m_.n) - 1)); }

private:
    Rational f(int s, Mask w) {
        if (!w) return Rational(1);
        if (t_.is_leaf(s)) return Rational(m_.independent(w) ? 1 : 0);
        auto key = std::make_pair(s, w);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        // below a union node copies are non-adjacent, so blocks are unions of components;
        // below a join node any grouping of the vertices works
        auto parts = t_.node(s).label == 0 ? m_.components(w) : singletons(w);
        Rational total = spread(parts, t_.children(s), mult_, [&](int c, Mask block) { return f(c, block); });
        memo_.emplace(key, total);
        return total;
    }

    Masks m_;
    const Cotree& t_;
    std::vector<std::int64_t> mult_;
    std::map<std::pair<int, Mask>, Rational> memo_;
};

}  // namespace

Rational hom_branched(const Multigraph& g, const ColouredRootedTree& t, const OrnamentTable& ornaments,
                      const HomOptions& opt) {
    return BranchedHom(g, t, ornaments, opt).run();
}

Rational hom_cotree(const Multigraph& g, const Cotree& t) {
    if (t.node(t.root()).mult != 1) throw DomainError("root multiplicity must be 1");
    return CotreeHom(g, t).run();
}

}  // namespace strongpoly
