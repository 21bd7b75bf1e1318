#include "strongpoly/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "strongpoly/errors.hpp"

namespace strongpoly {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t i) {
    MultiPoly p(std::move(vars));
    if (i >= p.vars_.size()) throw DomainError("variable index out of range");
    Exponent e(p.vars_.size(), 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != vars_.size()) throw DomainError("exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw DomainError("evaluation point arity mismatch");
    // cache powers per variable
    std::vector<std::vector<Rational>> pw(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        pw[i].push_back(1);
        int d = degree_in(i);
        for (int j = 1; j <= d; ++j) pw[i].push_back(pw[i].back() * point[i]);
    }
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) t *= pw[i][e[i]];
        total += t;
    }
    return total;
}

Rational MultiPoly::evaluate(std::span<const std::int64_t> point) const {
    std::vector<Rational> p(point.begin(), point.end());
    return evaluate(std::span<const Rational>(p));
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return terms_.empty() ? -1 : d;
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw DomainError("polynomials over different variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
        int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::string out;
    for (std::size_t t = 0; t < ts.size(); ++t) {
        const auto& [e, c] = ts[t];
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (t == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag.str();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.str() + "*" + mono;
    }
    return out;
}

MultiPoly falling_product(const std::string& var, std::span<const Rational> roots) {
    MultiPoly p = MultiPoly::constant({var}, 1);
    for (const auto& r : roots) p = p * (MultiPoly::variable({var}, 0) - MultiPoly::constant({var}, r));
    return p;
}

}  // namespace strongpoly
