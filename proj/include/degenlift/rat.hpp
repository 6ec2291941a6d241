#ifndef DEGENLIFT_RAT_HPP
#define DEGENLIFT_RAT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degenlift {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over mpq_class.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rat(const mpz_class& num, const mpz_class& den);

    // Accepts "p", "-p", "p/q" with optional surrounding blanks.
    static Rat parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat abs() const;
    Rat inverse() const;  // throws std::domain_error on zero

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class v_;
};

Rat pow(const Rat& base, int exponent);

// gcd / lcm of integers, always non-negative.
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace degenlift

#endif
