#include "strongpoly/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "strongpoly/errors.hpp"

namespace strongpoly {

std::string to_string(FitStatus s) { return s == FitStatus::Consistent ? "Consistent" : "Inconsistent"; }

namespace {

constexpr std::size_t kMaxSparseMonomials = 1500;

using DegreeMap = std::map<std::string, int>;

void raise(DegreeMap& into, const DegreeMap& from) {
    for (const auto& [k, v] : from) into[k] = std::max(into[k], v);
}

DegreeMap add(DegreeMap a, const DegreeMap& b) {
    for (const auto& [k, v] : b) a[k] += v;
    return a;
}

DegreeMap param_degree(const FamilyArg& a, int d) {
    DegreeMap m;
    if (auto* s = std::get_if<std::string>(&a)) m[*s] = d;
    return m;
}

// Degree of |V(H)| in each parameter.
DegreeMap size_degree(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Gen: {
        int per = e.family.kind == FamilyKind::Johnson ? std::max(e.family.johnson_l, 1) : 1;
        DegreeMap m;
        for (const auto& p : e.params) m = add(m, param_degree(p, per));
        return m;
    }
    case ExprKind::Fixed:
        return {};
    case ExprKind::Complement:
    case ExprKind::LoopedComplement:
    case ExprKind::Reweight:
        return size_degree(*e.sub[0]);
    case ExprKind::Line: {
        DegreeMap m = size_degree(*e.sub[0]);
        for (auto& [k, v] : m) v *= 2;
        return m;
    }
    case ExprKind::Union:
    case ExprKind::Join: {
        DegreeMap m = size_degree(*e.sub[0]);
        raise(m, size_degree(*e.sub[1]));
        return m;
    }
    case ExprKind::Product:
    case ExprKind::Lex:
        return add(size_degree(*e.sub[0]), size_degree(*e.sub[1]));
    case ExprKind::Compose: {
        DegreeMap m;
        for (const auto& s : e.sub) raise(m, size_degree(*s));
        return m;
    }
    case ExprKind::BlowUp: {
        DegreeMap m;
        for (const auto& p : e.params) raise(m, param_degree(p, 1));
        return m;
    }
    case ExprKind::Branched: {
        std::map<std::string, DegreeMap> orn;
        for (const auto& [label, x] : e.ornaments) orn[label] = size_degree(*x);
        DegreeMap m;
        for (int s = 0; s < e.tree->size(); ++s) {
            DegreeMap chain = orn[e.tree->node(s).ornament];
            for (int t : e.tree->chain(s)) chain = add(chain, param_degree(e.params[t], 1));
            raise(m, chain);
        }
        return m;
    }
    case ExprKind::CotreeBranch: {
        DegreeMap m;
        for (int s = 0; s < e.cotree->size(); ++s) {
            if (!e.cotree->is_leaf(s)) continue;
            DegreeMap chain;
            for (std::optional<int> t = s; t; t = e.cotree->node(*t).parent)
                chain = add(chain, param_degree(e.params[*t], 1));
            raise(m, chain);
        }
        return m;
    }
    }
    return {};
}

struct Plan {
    int degree = 0;
    bool sparse = false;
    std::vector<Point> train;
    std::vector<Point> validate;
};

Plan make_plan(std::size_t h, int d, const VerifyOptions& opt) {
    Plan p;
    p.degree = d;
    if (h <= opt.full_grid_limit) {
        p.train = full_grid(h, d);
        p.validate = validation_points(h, d, opt.offsets);
        return p;
    }
    p.sparse = true;
    std::size_t monomials = 1;
    for (std::size_t i = 0; i < h; ++i) {
        monomials *= std::size_t(d) + 1;
        if (monomials > kMaxSparseMonomials) throw ResourceError("too many monomials for the sparse fit");
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::int64_t> coord(1, d + 3);
    std::set<Point> used;
    auto draw = [&](std::size_t count, std::vector<Point>& out) {
        std::size_t attempts = 0;
        while (out.size() < count) {
            if (++attempts > 1000 * count) throw ResourceError("could not draw distinct sample points");
            Point x(h);
            for (auto& c : x) c = coord(rng);
            if (used.insert(x).second) out.push_back(std::move(x));
        }
    };
    draw(2 * monomials, p.train);
    draw(8, p.validate);
    return p;
}

FitVerdict finish(const Plan& plan, const std::vector<std::string>& params, const std::vector<Rational>& train_vals,
                  const std::vector<Rational>& val_vals) {
    FitVerdict v;
    v.degree = plan.degree;
    v.sparse = plan.sparse;
    SampleGrid grid{plan.train, train_vals};
    if (plan.sparse) {
        auto fit = fit_monomials(grid, plan.degree, params);
        if (!fit) {
            // the training samples alone already contradict a polynomial of this degree
            v.status = FitStatus::Inconsistent;
            v.witness = FitWitness{plan.train.front(), Rational(), train_vals.front()};
            for (std::size_t i = 0; i < plan.train.size(); ++i)
                v.rows.push_back({plan.train[i], train_vals[i], Rational(), false});
            return v;
        }
        v.poly = std::move(*fit);
    } else {
        v.poly = fit_grid(grid, plan.degree, params);
    }
    for (std::size_t i = 0; i < plan.train.size(); ++i)
        v.rows.push_back({plan.train[i], train_vals[i], v.poly->evaluate(std::span<const std::int64_t>(plan.train[i])),
                          false});
    for (std::size_t i = 0; i < plan.validate.size(); ++i) {
        Rational pred = v.poly->evaluate(std::span<const std::int64_t>(plan.validate[i]));
        v.rows.push_back({plan.validate[i], val_vals[i], pred, true});
        if (pred != val_vals[i] && !v.witness) {
            v.status = FitStatus::Inconsistent;
            v.witness = FitWitness{plan.validate[i], pred, val_vals[i]};
        }
    }
    for (const auto& r : v.rows)
        if (!r.validation && !r.match() && !v.witness) {
            v.status = FitStatus::Inconsistent;
            v.witness = FitWitness{r.point, r.predicted, r.hom};
        }
    return v;
}

int default_degree(const Multigraph& g, int vertex_degree) { return g.n() * std::max(vertex_degree, 0); }

}  // namespace

int vertex_count_degree(const SequenceExpr& seq) {
    int d = 0;
    for (const auto& [k, v] : size_degree(seq.root())) d = std::max(d, v);
    return d;
}

std::vector<Point> validation_points(std::size_t h, int d, const std::vector<int>& offsets) {
    std::vector<Point> out;
    std::set<Point> seen;
    auto push = [&](Point p) {
        if (seen.insert(p).second) out.push_back(std::move(p));
    };
    for (int o : offsets) {
        if (o < 1) throw DomainError("validation offsets must be positive");
        if (h == 0) continue;
        push(Point(h, d + 1 + o));
        if (h == 1) continue;
        for (std::size_t i = 0; i < h; ++i) {
            Point p(h);
            for (std::size_t j = 0; j < h; ++j)
                p[j] = j == i ? d + 1 + o : 1 + std::int64_t((j + std::size_t(o)) % std::size_t(d + 1));
            push(std::move(p));
        }
    }
    return out;
}

namespace {

// Fills values[gi][point] for every graph index listed.
using Filler = std::function<void(const Point&, const std::vector<std::size_t>&, std::vector<std::map<Point, Rational>>&)>;

std::vector<FitVerdict> run_batch(const std::vector<std::string>& params, const std::vector<Multigraph>& gs,
                                  const VerifyOptions& opt, int vertex_degree, const Filler& fill) {
    std::size_t h = params.size();
    std::vector<Plan> plans;
    std::map<Point, std::vector<std::size_t>> need;  // point -> graphs needing it
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        int d = opt.degree ? *opt.degree : default_degree(gs[gi], vertex_degree);
        if (d < 0) throw DomainError("negative degree bound");
        plans.push_back(make_plan(h, d, opt));
        for (const auto& p : plans.back().train) need[p].push_back(gi);
        for (const auto& p : plans.back().validate) need[p].push_back(gi);
    }
    std::vector<std::map<Point, Rational>> values(gs.size());
    for (const auto& [point, who] : need) fill(point, who, values);
    std::vector<FitVerdict> out;
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        std::vector<Rational> tv, vv;
        for (const auto& p : plans[gi].train) tv.push_back(values[gi].at(p));
        for (const auto& p : plans[gi].validate) vv.push_back(values[gi].at(p));
        out.push_back(finish(plans[gi], params, tv, vv));
    }
    return out;
}

}  // namespace

std::vector<FitVerdict> verify_batch(const Evaluator& seq, const std::vector<std::string>& params,
                                     const std::vector<Multigraph>& gs, const VerifyOptions& opt, int vertex_degree) {
    return run_batch(params, gs, opt, vertex_degree, [&](const Point& point, const std::vector<std::size_t>& who, auto& values) {
        CompiledTarget target(seq(point));
        for (std::size_t gi : who) values[gi].emplace(point, hom(gs[gi], target, opt.hom));
    });
}

std::vector<FitVerdict> verify_batch(const SequenceExpr& seq, const std::vector<Multigraph>& gs,
                                     const VerifyOptions& opt) {
    auto kind = seq.root().kind;
    if (opt.tree_hom && (kind == ExprKind::Branched || kind == ExprKind::CotreeBranch)) {
        return run_batch(seq.free_params(), gs, opt, vertex_count_degree(seq),
                         [&](const Point& point, const std::vector<std::size_t>& who, auto& values) {
                             for (std::size_t gi : who) values[gi].emplace(point, *tree_hom(seq, gs[gi], point, opt.hom));
                         });
    }
    Evaluator ev = [&seq](std::span<const std::int64_t> x) { return seq.eval(x); };
    return verify_batch(ev, seq.free_params(), gs, opt, vertex_count_degree(seq));
}

FitVerdict verify_strongly_polynomial(const Evaluator& seq, const std::vector<std::string>& params,
                                      const Multigraph& g, const VerifyOptions& opt) {
    return verify_batch(seq, params, {g}, opt).front();
}

FitVerdict verify_strongly_polynomial(const SequenceExpr& seq, const Multigraph& g, const VerifyOptions& opt) {
    return verify_batch(seq, {g}, opt).front();
}

std::string verdict_csv(const FitVerdict& v, const std::vector<std::string>& params) {
    std::string out;
    for (const auto& p : params) out += p + ",";
    out += "hom,predicted,match\n";
    for (const auto& r : v.rows) {
        for (auto x : r.point) out += std::to_string(x) + ",";
        out += r.hom.str() + "," + r.predicted.str() + "," + (r.match() ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace strongpoly
