#ifndef DEGENLIFT_POLY_HPP
#define DEGENLIFT_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degenlift/rat.hpp"

namespace degenlift {

// Sparse multivariate polynomial over the rationals.
//
// A Poly lives in a ring given by its declared variable names (sorted,
// unique). Variables may be declared without occurring in any term; binary
// operations work in the union of the operand rings. Terms are stored in
// graded-lexicographic order, descending, with variables ranked by name
// (the first name is the most significant). No zero coefficient is stored.
class Poly {
public:
    using Exponents = std::vector<int>;

    struct GrlexGreater {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rat, GrlexGreater>;

    Poly() = default;
    Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rat(c)) {}   // NOLINT(google-explicit-constructor)

    static Poly var(const std::string& name);
    static Poly constant(const Rat& c, std::vector<std::string> ring);
    static Poly monomial(const Rat& c, const std::map<std::string, int>& powers);
    // Parses "+ - * / ^ ( )", integers and identifiers. Division is only
    // accepted by nonzero constants.
    static Poly parse(std::string_view text);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_term().is_one(); }
    Rat constant_term() const;

    bool declares(const std::string& v) const;
    bool uses(const std::string& v) const;
    std::vector<std::string> used_vars() const;
    Poly with_vars(const std::vector<std::string>& extra) const;

    // Degree in one variable; -1 for the zero polynomial.
    int degree(const std::string& v) const;
    int total_degree() const;
    int total_degree_in(const std::vector<std::string>& subset) const;
    bool is_homogeneous_in(const std::vector<std::string>& subset, int degree) const;

    Rat leading_coefficient() const;
    // Exponent of v in the leading term (0 if v not declared).
    std::map<std::string, int> leading_monomial() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    Poly operator-() const;

    Poly pow(int exponent) const;
    Poly partial(const std::string& v) const;

    Poly subs(const std::string& v, const Poly& value) const;
    Poly subs(const std::map<std::string, Poly>& values) const;
    Poly eval(const std::map<std::string, Rat>& values) const;

    // Coefficients of p viewed as a polynomial in v; index = power of v.
    std::vector<Poly> coefficients_in(const std::string& v) const;
    Poly coefficient_of(const std::string& v, int power) const;
    static Poly from_coefficients(const std::vector<Poly>& coeffs, const std::string& v);

    // p = content() * primitive(), where primitive() has coprime integer
    // coefficients and a positive leading coefficient. Zero maps to zero.
    Poly primitive() const;
    Rat content() const;

    std::string str() const;

    // Semantic equality: declared-but-unused variables are ignored.
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Deterministic total order (used for canonical sorting only).
    friend bool operator<(const Poly& a, const Poly& b);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    Poly remapped(const std::vector<std::string>& ring) const;
    std::size_t index_of(const std::string& v) const;

    friend Poly divide_exact(const Poly& num, const Poly& den);
};

Poly divide_exact(const Poly& num, const Poly& den);
bool divides(const Poly& d, const Poly& p);

// Greatest common divisor over Q, normalized by Poly::primitive().
// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

}  // namespace degenlift

#endif
