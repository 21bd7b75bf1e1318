#include "strongpoly/linalg.hpp"

#include "strongpoly/errors.hpp"

namespace strongpoly {

SolveResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    std::size_t m = a.size();
    if (b.size() != m) throw DomainError("right-hand side size mismatch");
    std::size_t n = m ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("ragged matrix");

    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c].is_zero()) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < n; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < n; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!b[i].is_zero()) return {SolveStatus::Inconsistent, {}};
    if (r < n) return {SolveStatus::Singular, {}};
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return {SolveStatus::Unique, std::move(x)};
}

}  // namespace strongpoly
