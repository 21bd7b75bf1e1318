#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "strongpoly/rational.hpp"

namespace strongpoly {

/// Polynomial with rational coefficients in named variables. Zero
/// coefficients are never stored.
class MultiPoly {
public:
    using Exponent = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t i);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;

    Rational evaluate(std::span<const Rational> point) const;
    Rational evaluate(std::span<const std::int64_t> point) const;

    int total_degree() const;
    int degree_in(std::size_t var) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

    /// Human-readable form, highest total degree first: "k^3 - 3*k^2 + 2*k".
    std::string str() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

private:
    void check_compatible(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_;
};

inline bool poly_equal(const MultiPoly& a, const MultiPoly& b) { return a == b; }

/// Linear univariate helper: product of (x - r) over roots.
MultiPoly falling_product(const std::string& var, std::span<const Rational> roots);

}  // namespace strongpoly
