#ifndef DEGENLIFT_LINALG_HPP
#define DEGENLIFT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "degenlift/poly.hpp"
#include "degenlift/ratfunc.hpp"

namespace degenlift {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Reduced row echelon form over a field (Rat or RatFunc). Returns the pivot
// column of each nonzero row.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        const F inv = F(1) / m[r][c];
        for (auto& x : m[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) {
                continue;
            }
            const F factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!m[r][j].is_zero()) {
                    m[i][j] -= factor * m[r][j];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m)
{
    return rref(m).size();
}

// Basis of {x : m x = 0}; each vector has its first nonzero entry equal to 1.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols)
{
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<F> v(cols, F(0));
        v[free] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -m[i][free];
        }
        for (const auto& x : v) {
            if (!x.is_zero()) {
                const F inv = F(1) / x;
                for (auto& y : v) {
                    y *= inv;
                }
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of a x = b (free unknowns set to zero), or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b)
{
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    Matrix<F> aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].push_back(b[i]);
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) {
        return std::nullopt;
    }
    std::vector<F> x(cols, F(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

// Outcome of fraction-free elimination of a x = b over Q[params].
struct EliminationResult {
    // Unknown columns in the order they were pivoted, with the row used.
    std::vector<std::size_t> pivot_columns;
    std::vector<std::size_t> pivot_rows;
    std::vector<Poly> pivots;
    // Consistency conditions on the parameters: primitive, saturated by the
    // pivots, deduplicated and sorted. A constant condition means the
    // system is inconsistent for all parameter values.
    std::vector<Poly> conditions;
    // Solution of the pivot rows over the parameter field, free unknowns 0.
    std::vector<RatFunc> solution;
    bool unique = false;
};

// Eliminates column by column. In each column the pivot is taken from the
// remaining row with the fewest nonzero unknown entries, ties going to the
// lowest row index. Rows are kept primitive after every step.
EliminationResult eliminate_fraction_free(Matrix<Poly> a, std::vector<Poly> b);

// Removes from p every factor it shares with one of the given polynomials.
Poly saturate(Poly p, const std::vector<Poly>& by);

}  // namespace degenlift

#endif
