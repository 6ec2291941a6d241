#include "degenlift/linalg.hpp"

#include <algorithm>

#include "degenlift/errors.hpp"

namespace degenlift {

namespace {

std::size_t nonzero_count(const std::vector<Poly>& row)
{
    return static_cast<std::size_t>(
        std::count_if(row.begin(), row.end(), [](const Poly& p) { return !p.is_zero(); }));
}

// Divides the row (and its right-hand side) by the gcd of its entries as
// long as some unknown entry is nonzero, then clears rational content.
void make_primitive(std::vector<Poly>& row, Poly& rhs)
{
    if (nonzero_count(row) == 0) {
        return;
    }
    Poly g = rhs;
    for (const auto& x : row) {
        g = gcd(g, x);
        if (g.is_one()) {
            break;
        }
    }
    if (!g.is_constant()) {
        for (auto& x : row) {
            x = divide_exact(x, g);
        }
        rhs = divide_exact(rhs, g);
    }
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    auto fold = [&](const Poly& p) {
        for (const auto& [ex, c] : p.terms()) {
            num_gcd = gcd(num_gcd, c.num());
            den_lcm = lcm(den_lcm, c.den());
        }
    };
    fold(rhs);
    for (const auto& x : row) {
        fold(x);
    }
    const Rat scale(den_lcm, num_gcd);
    if (!scale.is_one()) {
        for (auto& x : row) {
            x *= scale;
        }
        rhs *= scale;
    }
}

}  // namespace

Poly saturate(Poly p, const std::vector<Poly>& by)
{
    if (p.is_zero()) {
        return p;
    }
    bool changed = true;
    while (changed && !p.is_constant()) {
        changed = false;
        for (const auto& q : by) {
            if (q.is_zero() || q.is_constant()) {
                continue;
            }
            const Poly g = gcd(p, q);
            if (!g.is_constant()) {
                p = divide_exact(p, g);
                changed = true;
            }
        }
    }
    return p.primitive();
}

EliminationResult eliminate_fraction_free(Matrix<Poly> a, std::vector<Poly> b)
{
    if (a.size() != b.size()) {
        throw InvalidArgument("eliminate_fraction_free: row count mismatch");
    }
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        make_primitive(a[r], b[r]);
    }
    EliminationResult res;
    std::vector<bool> used(rows, false);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t best = rows;
        std::size_t best_count = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r] || a[r][c].is_zero()) {
                continue;
            }
            const std::size_t n = nonzero_count(a[r]);
            if (best == rows || n < best_count) {
                best = r;
                best_count = n;
            }
        }
        if (best == rows) {
            continue;
        }
        used[best] = true;
        res.pivot_columns.push_back(c);
        res.pivot_rows.push_back(best);
        res.pivots.push_back(a[best][c]);
        const Poly p = a[best][c];
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r] || a[r][c].is_zero()) {
                continue;
            }
            const Poly factor = a[r][c];
            for (std::size_t j = 0; j < cols; ++j) {
                a[r][j] = p * a[r][j] - factor * a[best][j];
            }
            b[r] = p * b[r] - factor * b[best];
            make_primitive(a[r], b[r]);
        }
    }
    for (std::size_t r = 0; r < rows; ++r) {
        if (used[r] || b[r].is_zero()) {
            continue;
        }
        const Poly cond = saturate(b[r], res.pivots);
        if (std::find(res.conditions.begin(), res.conditions.end(), cond) ==
            res.conditions.end()) {
            res.conditions.push_back(cond);
        }
    }
    std::sort(res.conditions.begin(), res.conditions.end());
    // A constant condition subsumes every other one.
    for (const auto& c : res.conditions) {
        if (c.is_constant()) {
            res.conditions = {c};
            break;
        }
    }

    res.solution.assign(cols, RatFunc());
    for (std::size_t k = res.pivot_columns.size(); k-- > 0;) {
        const std::size_t c = res.pivot_columns[k];
        const std::size_t r = res.pivot_rows[k];
        RatFunc acc(b[r]);
        for (std::size_t j = 0; j < cols; ++j) {
            if (j != c && !a[r][j].is_zero() && !res.solution[j].is_zero()) {
                acc -= RatFunc(a[r][j]) * res.solution[j];
            }
        }
        res.solution[c] = acc / RatFunc(a[r][c]);
    }
    res.unique = res.pivot_columns.size() == cols;
    return res;
}

}  // namespace degenlift
