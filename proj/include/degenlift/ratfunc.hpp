#ifndef DEGENLIFT_RATFUNC_HPP
#define DEGENLIFT_RATFUNC_HPP

#include <map>
#include <string>

#include "degenlift/poly.hpp"

namespace degenlift {

// Quotient of two polynomials in canonical form: num and den share no
// common factor, all coefficients are integers with no common divisor and
// the leading coefficient of den is positive. Two RatFuncs are equal as
// functions iff their canonical forms coincide.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Rat& c);   // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& p);  // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc parse(std::string_view text);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Value of a constant RatFunc; throws InvalidArgument otherwise.
    Rat to_rat() const;
    // The polynomial num/den; throws InexactDivision if den is not constant.
    Poly to_poly() const;

    bool uses(const std::string& v) const { return num_.uses(v) || den_.uses(v); }
    std::vector<std::string> used_vars() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    RatFunc inverse() const;
    RatFunc pow(int exponent) const;

    // Throws ZeroDenominator when the denominator vanishes at the point.
    RatFunc subs(const std::map<std::string, RatFunc>& values) const;
    RatFunc eval(const std::map<std::string, Rat>& values) const;

    // "num" when den = 1, otherwise "(num)/(den)" with parentheses dropped
    // around single terms.
    std::string str() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    Poly num_;
    Poly den_ = Poly(1);

    void normalize();
};

}  // namespace degenlift

#endif
