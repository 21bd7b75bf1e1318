#include "strongpoly/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "strongpoly/errors.hpp"

namespace strongpoly {

namespace {

struct NameEntry {
    FamilyKind kind;
    const char* name;
    int arity;
};

constexpr NameEntry kNames[] = {
    {FamilyKind::Complete, "K", 1},
    {FamilyKind::Coclique, "Kbar", 1},
    {FamilyKind::LoopedComplete, "Kloop", 1},
    {FamilyKind::LoopedCoclique, "Loops", 1},
    {FamilyKind::Matching, "Matching", 1},
    {FamilyKind::CompleteBipartite, "Kbip", 2},
    {FamilyKind::CompleteMultipartite, "Kmulti", 2},
    {FamilyKind::Hypercube, "Q", 1},
    {FamilyKind::Johnson, "J", 1},
    {FamilyKind::Rook, "Rook", 2},
    {FamilyKind::Pow2Loop, "Pow2Loop", 1},
    {FamilyKind::Windmill, "Windmill", 2},
};

const NameEntry& entry(FamilyKind k) {
    for (const auto& e : kNames)
        if (e.kind == k) return e;
    throw DomainError("unknown family");
}

int checked_size(std::int64_t v, const char* what) {
    if (v < 1) throw DomainError(std::string(what) + " must be a positive integer");
    if (v > 100000) throw ResourceError(std::string(what) + " too large");
    return int(v);
}

WeightedGraph complete(int k, const Rational& loop) {
    GraphBuilder b(k);
    b.reserve(std::size_t(k) * (k + 1) / 2);
    for (int u = 0; u < k; ++u) {
        if (!loop.is_zero()) b.set(u, u, loop);
        for (int v = u + 1; v < k; ++v) b.set(u, v, 1);
    }
    return b.build();
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::int64_t(1) << 40)) return r;  // callers only compare against small caps
    }
    return r;
}

int FamilyId::arity() const { return entry(kind).arity; }

std::string FamilyId::name() const { return entry(kind).name; }

WeightedGraph generate(const FamilyId& f, std::span<const std::int64_t> p) {
    if (int(p.size()) != f.arity())
        throw DomainError("family " + f.name() + " takes " + std::to_string(f.arity()) + " parameter(s)");
    switch (f.kind) {
    case FamilyKind::Complete:
        return complete(checked_size(p[0], "k"), Rational());
    case FamilyKind::Coclique:
        return WeightedGraph(checked_size(p[0], "k"));
    case FamilyKind::LoopedComplete:
        return complete(checked_size(p[0], "k"), f.loop_weight);
    case FamilyKind::LoopedCoclique: {
        int k = checked_size(p[0], "k");
        GraphBuilder b(k);
        for (int v = 0; v < k; ++v) b.set(v, v, 1);
        return b.build();
    }
    case FamilyKind::Matching: {
        int k = checked_size(p[0], "k");
        GraphBuilder b(2 * k);
        for (int i = 0; i < k; ++i) b.set(2 * i, 2 * i + 1, 1);
        return b.build();
    }
    case FamilyKind::CompleteBipartite: {
        int j = checked_size(p[0], "j"), k = checked_size(p[1], "k");
        GraphBuilder b(j + k);
        for (int u = 0; u < j; ++u)
            for (int v = 0; v < k; ++v) b.set(u, j + v, 1);
        return b.build();
    }
    case FamilyKind::CompleteMultipartite: {
        int l = checked_size(p[0], "l"), k = checked_size(p[1], "k");
        GraphBuilder b(l * k);
        for (int u = 0; u < l * k; ++u)
            for (int v = u + 1; v < l * k; ++v)
                if (u / k != v / k) b.set(u, v, 1);
        return b.build();
    }
    case FamilyKind::Hypercube: {
        int k = checked_size(p[0], "k");
        if (k > kMaxHypercube) throw ResourceError("hypercube dimension capped at 10");
        int n = 1 << k;
        GraphBuilder b(n);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < k; ++i)
                if (!(v >> i & 1)) b.set(v, v | (1 << i), 1);
        return b.build();
    }
    case FamilyKind::Johnson: {
        int k = checked_size(p[0], "k");
        int l = f.johnson_l;
        if (l < 0) throw DomainError("johnson subset size must be non-negative");
        if (k > 62 || binomial(k, l) > kMaxJohnsonVertices)
            throw ResourceError("johnson graph limited to 300 vertices");
        for (int d : f.johnson_d)
            if (d < 0 || d >= std::max(l, 1)) throw DomainError("johnson intersection sizes must lie in 0..l-1");
        std::vector<std::uint64_t> sets;
        if (l <= k) {
            std::uint64_t s = (std::uint64_t(1) << l) - 1;
            std::uint64_t limit = std::uint64_t(1) << k;
            while (s < limit) {
                sets.push_back(s);
                if (s == 0) break;
                // next subset of the same size in colex order
                std::uint64_t c = s & (~s + 1), r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        GraphBuilder b(int(sets.size()));
        for (std::size_t u = 0; u < sets.size(); ++u)
            for (std::size_t v = u + 1; v < sets.size(); ++v) {
                int inter = std::popcount(sets[u] & sets[v]);
                if (std::binary_search(f.johnson_d.begin(), f.johnson_d.end(), inter)) b.set(int(u), int(v), 1);
            }
        return b.build();
    }
    case FamilyKind::Rook: {
        int j = checked_size(p[0], "j"), k = checked_size(p[1], "k");
        GraphBuilder b(j * k);
        for (int u = 0; u < j * k; ++u)
            for (int v = u + 1; v < j * k; ++v)
                if ((u / k == v / k) != (u % k == v % k)) b.set(u, v, 1);
        return b.build();
    }
    case FamilyKind::Pow2Loop: {
        int k = checked_size(p[0], "k");
        GraphBuilder b(k);
        for (int label = 1; label <= k; label *= 2) b.set(label - 1, label - 1, 1);
        return b.build();
    }
    case FamilyKind::Windmill: {
        int k1 = int(p[0]), k2 = int(p[1]);
        if (k1 < 0 || k2 < 0) throw DomainError("windmill counts must be non-negative");
        GraphBuilder b(1 + 2 * k1 + 2 * k2);
        int next = 1;
        for (int i = 0; i < k1; ++i, next += 2) {
            b.set(0, next, 1);
            b.set(next, next + 1, 1);
            b.set(0, next + 1, 1);
        }
        for (int i = 0; i < k2; ++i, next += 2) {
            b.set(0, next, 1);
            b.set(next, next + 1, 1);
        }
        return b.build();
    }
    }
    throw DomainError("unknown family");
}

// ---------------------------------------------------------------------------

namespace {

struct SpecLexer {
    std::string_view s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in family spec '" + std::string(s) + "'");
    }
    std::string token() {
        ws();
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '-' ||
                                s[i] == '/' || s[i] == '\''))
            ++i;
        if (start == i) throw ParseError("unexpected character in family spec '" + std::string(s) + "'");
        return std::string(s.substr(start, i - start));
    }
};

bool is_integer_token(const std::string& t) {
    std::size_t start = (!t.empty() && t[0] == '-') ? 1 : 0;
    return t.size() > start && std::all_of(t.begin() + long(start), t.end(), [](char c) { return std::isdigit(c); });
}

FamilyArg to_arg(const std::string& t) {
    if (is_integer_token(t)) return std::int64_t(std::stoll(t));
    if (!std::isalpha(static_cast<unsigned char>(t[0]))) throw ParseError("bad parameter '" + t + "'");
    return t;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
    SpecLexer lx{text};
    std::string name = lx.token();
    const NameEntry* e = nullptr;
    for (const auto& x : kNames)
        if (name == x.name) e = &x;
    if (!e) throw ParseError("unknown family '" + name + "'");
    FamilySpec spec;
    spec.id.kind = e->kind;
    lx.expect('(');
    spec.args.push_back(to_arg(lx.token()));
    if (e->kind == FamilyKind::LoopedComplete) {
        lx.expect(',');
        spec.id.loop_weight = Rational::parse(lx.token());
    } else if (e->kind == FamilyKind::Johnson) {
        lx.expect(',');
        std::string l = lx.token();
        if (!is_integer_token(l)) throw ParseError("johnson subset size must be an integer");
        spec.id.johnson_l = std::stoi(l);
        lx.expect(',');
        lx.expect('{');
        if (!lx.eat('}')) {
            do {
                std::string d = lx.token();
                if (!is_integer_token(d)) throw ParseError("johnson intersection sizes must be integers");
                spec.id.johnson_d.push_back(std::stoi(d));
            } while (lx.eat(','));
            lx.expect('}');
        }
        std::sort(spec.id.johnson_d.begin(), spec.id.johnson_d.end());
        spec.id.johnson_d.erase(std::unique(spec.id.johnson_d.begin(), spec.id.johnson_d.end()),
                                spec.id.johnson_d.end());
    }
    while (lx.eat(',')) spec.args.push_back(to_arg(lx.token()));
    lx.expect(')');
    lx.ws();
    if (lx.i != text.size()) throw ParseError("trailing input in family spec");
    if (int(spec.args.size()) != e->arity)
        throw ParseError("family " + name + " takes " + std::to_string(e->arity) + " parameter(s)");
    return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
    auto arg = [](const FamilyArg& a) {
        return std::holds_alternative<std::string>(a) ? std::get<std::string>(a)
                                                      : std::to_string(std::get<std::int64_t>(a));
    };
    std::string out = spec.id.name() + "(" + arg(spec.args.at(0));
    if (spec.id.kind == FamilyKind::LoopedComplete) out += "," + spec.id.loop_weight.str();
    if (spec.id.kind == FamilyKind::Johnson) {
        out += "," + std::to_string(spec.id.johnson_l) + ",{";
        for (std::size_t i = 0; i < spec.id.johnson_d.size(); ++i)
            out += (i ? "," : "") + std::to_string(spec.id.johnson_d[i]);
        out += "}";
    }
    for (std::size_t i = 1; i < spec.args.size(); ++i) out += "," + arg(spec.args[i]);
    return out + ")";
}

}  // namespace strongpoly
