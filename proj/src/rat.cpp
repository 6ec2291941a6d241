#include "degenlift/rat.hpp"

#include <cctype>
#include <stdexcept>

#include "degenlift/errors.hpp"

namespace degenlift {

Rat::Rat(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den)
{
    if (sgn(den) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

mpz_class parse_integer(std::string_view s)
{
    std::string buf(s);
    if (!buf.empty() && buf.front() == '+') {
        buf.erase(0, 1);
    }
    return mpz_class(buf, 10);
}

}  // namespace

Rat Rat::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer(s)) {
            throw ParseError(1, 1, "malformed rational '" + std::string(s) + "'");
        }
        return Rat(parse_integer(s));
    }
    const auto n = trim(s.substr(0, slash));
    const auto d = trim(s.substr(slash + 1));
    if (!valid_integer(n) || !valid_integer(d) || d.front() == '-') {
        throw ParseError(1, 1, "malformed rational '" + std::string(s) + "'");
    }
    const mpz_class den = parse_integer(d);
    if (sgn(den) == 0) {
        throw ParseError(1, 1, "rational with zero denominator '" + std::string(s) + "'");
    }
    return Rat(parse_integer(n), den);
}

Rat Rat::abs() const
{
    Rat r;
    r.v_ = ::abs(v_);
    return r;
}

Rat Rat::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero rational");
    }
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

Rat& Rat::operator+=(const Rat& o)
{
    v_ += o.v_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o)
{
    v_ -= o.v_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o)
{
    v_ *= o.v_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    v_ /= o.v_;
    return *this;
}

Rat Rat::operator-() const
{
    Rat r;
    r.v_ = -v_;
    return r;
}

std::string Rat::str() const
{
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat pow(const Rat& base, int exponent)
{
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rat(n, d);
}

mpz_class gcd(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b)
{
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace degenlift
