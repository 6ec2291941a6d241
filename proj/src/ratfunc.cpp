#include "degenlift/ratfunc.hpp"

#include <algorithm>

#include "degenlift/errors.hpp"
#include "expr_parser.hpp"

namespace degenlift {

namespace {

// Integer scale factor c such that c*num and c*den have coprime integer
// coefficients.
Rat joint_scale(const Poly& num, const Poly& den)
{
    mpz_class g = 0;
    mpz_class l = 1;
    for (const Poly* p : {&num, &den}) {
        for (const auto& [ex, c] : p->terms()) {
            g = gcd(g, c.num());
            l = lcm(l, c.den());
        }
    }
    return Rat(l, g);
}

}  // namespace

RatFunc::RatFunc(const Rat& c) : num_(c) { normalize(); }

RatFunc::RatFunc(const Poly& p) : num_(p) { normalize(); }

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den)
{
    if (den_.is_zero()) {
        throw ZeroDenominator("rational function with zero denominator");
    }
    normalize();
}

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        const Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    Rat scale = joint_scale(num_, den_);
    if (den_.leading_coefficient().sign() < 0) {
        scale = -scale;
    }
    if (!scale.is_one()) {
        num_ *= scale;
        den_ *= scale;
    }
}

RatFunc RatFunc::parse(std::string_view text)
{
    return detail::ExprParser<RatFunc>(
               text,
               [](const RatFunc& a, const RatFunc& b) -> std::optional<RatFunc> {
                   if (b.is_zero()) {
                       return std::nullopt;
                   }
                   return a / b;
               })
        .run();
}

Rat RatFunc::to_rat() const
{
    if (!is_constant()) {
        throw InvalidArgument("rational function " + str() + " is not a constant");
    }
    return num_.constant_term() / den_.constant_term();
}

Poly RatFunc::to_poly() const
{
    if (!den_.is_constant()) {
        throw InexactDivision("rational function " + str() + " is not a polynomial");
    }
    return num_ * den_.constant_term().inverse();
}

std::vector<std::string> RatFunc::used_vars() const
{
    return merge_vars(num_.used_vars(), den_.used_vars());
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        const Poly g = gcd(den_, o.den_);
        const Poly da = divide_exact(den_, g);
        const Poly db = divide_exact(o.den_, g);
        num_ = num_ * db + o.num_ * da;
        den_ = den_ * db;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero() || o.is_zero()) {
        *this = RatFunc();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    // Cross-cancel first to keep the gcd in normalize() small.
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    num_ = divide_exact(num_, g1) * divide_exact(o.num_, g2);
    den_ = divide_exact(den_, g2) * divide_exact(o.den_, g1);
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) {
        throw ZeroDenominator("inverse of the zero rational function");
    }
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

RatFunc RatFunc::pow(int exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    RatFunc r;
    r.num_ = num_.pow(exponent);
    r.den_ = den_.pow(exponent);
    r.normalize();
    return r;
}

RatFunc RatFunc::subs(const std::map<std::string, RatFunc>& values) const
{
    // Bring every image over a common denominator and substitute polynomially.
    std::map<std::string, Poly> nums;
    std::map<std::string, Poly> dens;
    std::map<std::string, Poly> hom;
    for (const auto& [v, r] : values) {
        if (!num_.declares(v) && !den_.declares(v)) {
            continue;
        }
        nums.emplace(v, r.num_);
        dens.emplace(v, r.den_);
    }
    if (nums.empty()) {
        return *this;
    }
    auto substitute = [&](const Poly& p) {
        // p(n/d) = P(n, d) / prod d^deg: substitute variable by variable.
        RatFunc acc(p);
        for (const auto& [v, n] : nums) {
            const Poly& d = dens.at(v);
            const auto coeffs = acc.num_.coefficients_in(v);
            const int deg = static_cast<int>(coeffs.size()) - 1;
            Poly out;
            Poly npow = Poly(1);
            std::vector<Poly> dpows(static_cast<std::size_t>(std::max(deg, 0)) + 1, Poly(1));
            for (int k = 1; k <= deg; ++k) {
                dpows[static_cast<std::size_t>(k)] = dpows[static_cast<std::size_t>(k - 1)] * d;
            }
            for (int k = 0; k <= deg; ++k) {
                out += coeffs[static_cast<std::size_t>(k)] * npow *
                       dpows[static_cast<std::size_t>(deg - k)];
                npow = npow * n;
            }
            acc = RatFunc(out, deg > 0 ? acc.den_ * dpows[static_cast<std::size_t>(deg)] : acc.den_);
        }
        return acc;
    };
    const RatFunc top = substitute(num_);
    const RatFunc bottom = substitute(den_);
    if (bottom.is_zero()) {
        throw ZeroDenominator("denominator " + den_.str() + " vanishes under substitution");
    }
    return top / bottom;
}

RatFunc RatFunc::eval(const std::map<std::string, Rat>& values) const
{
    const Poly d = den_.eval(values);
    if (d.is_zero()) {
        throw ZeroDenominator("denominator " + den_.str() + " vanishes at the given point");
    }
    return RatFunc(num_.eval(values), d);
}

namespace {

std::string wrap(const Poly& p, bool strict)
{
    const std::string s = p.str();
    const bool compound = p.size() > 1 || (strict && s.find('*') != std::string::npos);
    return compound ? "(" + s + ")" : s;
}

}  // namespace

std::string RatFunc::str() const
{
    if (den_.is_one()) {
        return num_.str();
    }
    return wrap(num_, false) + "/" + wrap(den_, true);
}

}  // namespace degenlift
