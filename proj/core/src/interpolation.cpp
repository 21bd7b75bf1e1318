#include "strongpoly/interpolation.hpp"

#include <map>

#include "strongpoly/errors.hpp"
#include "strongpoly/linalg.hpp"

namespace strongpoly {

std::vector<Point> full_grid(std::size_t h, int d) {
    std::vector<Point> out;
    Point p(h, 1);
    while (true) {
        out.push_back(p);
        std::size_t i = 0;
        while (i < h && ++p[i] > d + 1) p[i++] = 1;
        if (i == h) break;
    }
    return out;
}

MultiPoly fit_grid(const SampleGrid& samples, int d, std::vector<std::string> vars) {
    std::size_t h = vars.size();
    if (d < 0) throw DomainError("negative degree bound");
    if (samples.points.size() != samples.values.size()) throw DomainError("sample size mismatch");
    std::size_t side = std::size_t(d) + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < h; ++i) total *= side;

    auto index_of = [&](const Point& p) -> std::optional<std::size_t> {
        if (p.size() != h) throw DomainError("sample point arity mismatch");
        std::size_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < h; ++i) {
            if (p[i] < 1 || p[i] > std::int64_t(side)) return std::nullopt;
            idx += std::size_t(p[i] - 1) * stride;
            stride *= side;
        }
        return idx;
    };
    std::vector<Rational> c(total);
    std::vector<char> have(total, 0);
    for (std::size_t s = 0; s < samples.points.size(); ++s)
        if (auto idx = index_of(samples.points[s])) {
            c[*idx] = samples.values[s];
            have[*idx] = 1;
        }
    for (std::size_t i = 0; i < total; ++i)
        if (!have[i]) throw DomainError("incomplete sample grid");

    // Newton divided differences along each axis; nodes 1..d+1, so x_i - x_{i-l} = l
    std::size_t stride = 1;
    for (std::size_t axis = 0; axis < h; ++axis) {
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % side != 0) continue;
            for (std::size_t l = 1; l < side; ++l)
                for (std::size_t i = side - 1; i >= l; --i) {
                    std::size_t cur = base + i * stride, prev = base + (i - 1) * stride;
                    c[cur] = (c[cur] - c[prev]) / Rational(std::int64_t(l));
                    if (i == l) break;
                }
        }
        stride *= side;
    }

    // Newton basis N_i(x) = (x-1)(x-2)...(x-i) in monomial form
    std::vector<std::vector<Rational>> newton(side);
    newton[0] = {Rational(1)};
    for (std::size_t i = 1; i < side; ++i) {
        const auto& prev = newton[i - 1];
        std::vector<Rational> next(i + 1);
        for (std::size_t j = 0; j < prev.size(); ++j) {
            next[j + 1] += prev[j];
            next[j] -= prev[j] * Rational(std::int64_t(i));
        }
        newton[i] = std::move(next);
    }

    MultiPoly out(std::move(vars));
    std::map<MultiPoly::Exponent, Rational> acc;
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (c[idx].is_zero()) continue;
        std::vector<std::size_t> deg(h);
        std::size_t rest = idx;
        for (std::size_t i = 0; i < h; ++i) {
            deg[i] = rest % side;
            rest /= side;
        }
        // expand product over axes of newton[deg[i]]
        std::vector<std::pair<MultiPoly::Exponent, Rational>> partial{{MultiPoly::Exponent(h, 0), c[idx]}};
        for (std::size_t i = 0; i < h; ++i) {
            std::vector<std::pair<MultiPoly::Exponent, Rational>> next;
            for (const auto& [e, v] : partial)
                for (std::size_t j = 0; j < newton[deg[i]].size(); ++j) {
                    if (newton[deg[i]][j].is_zero()) continue;
                    auto e2 = e;
                    e2[i] = int(j);
                    next.emplace_back(std::move(e2), v * newton[deg[i]][j]);
                }
            partial = std::move(next);
        }
        for (auto& [e, v] : partial) acc[e] += v;
    }
    for (const auto& [e, v] : acc) out.add_term(e, v);
    return out;
}

std::optional<MultiPoly> fit_monomials(const SampleGrid& samples, int d, std::vector<std::string> vars) {
    std::size_t h = vars.size();
    std::vector<Point> exps = full_grid(h, d);
    for (auto& e : exps)
        for (auto& x : e) --x;  // exponents 0..d
    std::vector<std::vector<Rational>> a;
    a.reserve(samples.points.size());
    for (const auto& p : samples.points) {
        std::vector<Rational> row;
        row.reserve(exps.size());
        for (const auto& e : exps) {
            Rational v = 1;
            for (std::size_t i = 0; i < h; ++i) v *= Rational(p[i]).pow(std::uint64_t(e[i]));
            row.push_back(std::move(v));
        }
        a.push_back(std::move(row));
    }
    auto res = solve_exact(std::move(a), samples.values);
    if (res.status == SolveStatus::Inconsistent) return std::nullopt;
    if (res.status == SolveStatus::Singular) throw DomainError("sample points do not determine the polynomial");
    MultiPoly out(std::move(vars));
    for (std::size_t i = 0; i < exps.size(); ++i) {
        MultiPoly::Exponent e(exps[i].begin(), exps[i].end());
        out.add_term(e, res.x[i]);
    }
    return out;
}

CurveBasisSpec CurveBasisSpec::rectangle(int max_a, int max_b) {
    CurveBasisSpec s;
    for (int b = 0; b <= max_b; ++b)
        for (int a = 0; a <= max_a; ++a) s.terms.emplace_back(a, b);
    return s;
}

Rational CurveBasisSpec::evaluate_term(std::size_t i, std::int64_t k) const {
    auto [a, b] = terms[i];
    Rational v = Rational(k).pow(std::uint64_t(a));
    BigInt two_pow = BigInt(1) << (std::uint64_t(k) * std::uint64_t(b));
    return v * Rational(two_pow);
}

Rational CurveBasisSpec::evaluate(const std::vector<Rational>& coef, std::int64_t k) const {
    Rational total;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (!coef[i].is_zero()) total += coef[i] * evaluate_term(i, k);
    return total;
}

std::string CurveBasisSpec::str(const std::vector<Rational>& coef) const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (coef[i].is_zero()) continue;
        auto [a, b] = terms[i];
        std::string mono;
        if (a > 0) mono = a == 1 ? "k" : "k^" + std::to_string(a);
        if (b > 0) {
            if (!mono.empty()) mono += "*";
            mono += b == 1 ? "2^k" : "2^(" + std::to_string(b) + "k)";
        }
        bool neg = coef[i].sign() < 0;
        Rational mag = neg ? -coef[i] : coef[i];
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mono.empty())
            out += mag.str();
        else
            out += mag.is_one() ? mono : mag.str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

std::optional<std::vector<Rational>> fit_curve_basis(const std::vector<std::pair<std::int64_t, Rational>>& samples,
                                                     const CurveBasisSpec& spec) {
    if (samples.size() < spec.terms.size()) throw DomainError("fewer samples than basis functions");
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& [k, v] : samples) {
        std::vector<Rational> row;
        for (std::size_t i = 0; i < spec.terms.size(); ++i) row.push_back(spec.evaluate_term(i, k));
        a.push_back(std::move(row));
        b.push_back(v);
    }
    auto res = solve_exact(std::move(a), std::move(b));
    if (res.status == SolveStatus::Inconsistent) return std::nullopt;
    if (res.status == SolveStatus::Singular) throw DomainError("curve basis is singular on the sampled k");
    return res.x;
}

}  // namespace strongpoly
