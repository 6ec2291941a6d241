#ifndef DEGENLIFT_SERIES_HPP
#define DEGENLIFT_SERIES_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "degenlift/poly.hpp"
#include "degenlift/ratfunc.hpp"

namespace degenlift {

// Which of s, t are series variables and where each is truncated. An order
// of -1 means the variable is not a series variable (only its 0-th
// coefficient exists).
struct Truncation {
    int s = -1;
    int t = -1;

    static Truncation in_s(int order) { return {order, -1}; }
    static Truncation in_t(int order) { return {-1, order}; }
    static Truncation in_st(int s_order, int t_order) { return {s_order, t_order}; }

    bool keeps(int i, int j) const { return i <= std::max(s, 0) && j <= std::max(t, 0); }
    friend bool operator==(const Truncation&, const Truncation&) = default;
    std::string str() const;
};

// Truncated power series in s and/or t with RatFunc coefficients in the
// remaining variables. Binary operations require equal truncations.
class Series {
public:
    using Key = std::pair<int, int>;  // (s-order, t-order)

    Series() = default;
    explicit Series(Truncation tr) : tr_(tr) {}
    Series(Truncation tr, const RatFunc& constant);

    // The series variable s or t itself.
    static Series s(Truncation tr);
    static Series t(Truncation tr);

    const Truncation& truncation() const { return tr_; }
    const std::map<Key, RatFunc>& coefficients() const { return coeffs_; }

    RatFunc coefficient(int i, int j) const;
    void set(int i, int j, const RatFunc& c);

    bool is_zero() const { return coeffs_.empty(); }
    // Lowest t-order with a nonzero coefficient, or -1 for zero.
    int t_valuation() const;
    int s_valuation() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const RatFunc& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const RatFunc& c) { return a *= c; }
    friend Series operator*(const RatFunc& c, Series a) { return a *= c; }
    Series operator-() const;

    Series pow(int exponent) const;
    // Throws NotAUnit when the constant coefficient is zero.
    Series inverse() const;

    // Slice of t-order j as a series in s alone (t dropped).
    Series t_slice(int j) const;
    // Replaces s by a series in the same truncation. Requires sigma to have
    // zero constant term when s is truncated.
    Series compose_s(const Series& sigma) const;
    // Same series seen with coarser truncation.
    Series truncated(Truncation tr) const;
    // Coefficients re-expressed with s and t as ordinary variables.
    RatFunc to_ratfunc() const;
    Series map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const;

    std::string str() const;

    friend bool operator==(const Series& a, const Series& b)
    {
        return a.tr_ == b.tr_ && a.coeffs_ == b.coeffs_;
    }

private:
    Truncation tr_;
    std::map<Key, RatFunc> coeffs_;

    void require_same(const Series& o) const;
};

// Substitutes series for the named variables of p. Variables without a
// binding stay symbolic in the coefficients, except s and t, which become
// the series variables when tr distinguishes them.
Series poly_substitute(const Poly& p, const std::map<std::string, Series>& bindings,
                       Truncation tr);

// Views p (in the variables s, t and others) as a series.
Series to_series(const Poly& p, Truncation tr);
Series to_series(const RatFunc& r, Truncation tr);

}  // namespace degenlift

#endif
