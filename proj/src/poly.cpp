#include "degenlift/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "degenlift/errors.hpp"
#include "expr_parser.hpp"

namespace degenlift {

bool Poly::GrlexGreater::operator()(const Exponents& a, const Exponents& b) const
{
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) {
        return da > db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b)
{
    if (a == b) {
        return a;
    }
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Poly::Poly(const Rat& c)
{
    if (!c.is_zero()) {
        terms_.emplace(Exponents{}, c);
    }
}

Poly Poly::var(const std::string& name)
{
    if (name.empty()) {
        throw UnknownVariable("empty variable name");
    }
    Poly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rat(1));
    return p;
}

Poly Poly::constant(const Rat& c, std::vector<std::string> ring)
{
    std::sort(ring.begin(), ring.end());
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    Poly p;
    p.vars_ = std::move(ring);
    if (!c.is_zero()) {
        p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    }
    return p;
}

Poly Poly::monomial(const Rat& c, const std::map<std::string, int>& powers)
{
    Poly p;
    for (const auto& [v, e] : powers) {
        if (e < 0) {
            throw NegativeExponent("negative exponent for " + v);
        }
        p.vars_.push_back(v);
    }
    if (!c.is_zero()) {
        Exponents ex;
        for (const auto& [v, e] : powers) {
            ex.push_back(e);
        }
        p.terms_.emplace(std::move(ex), c);
    }
    return p;
}

bool Poly::is_constant() const
{
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() > 1) {
        return false;
    }
    const auto& ex = terms_.begin()->first;
    return std::all_of(ex.begin(), ex.end(), [](int e) { return e == 0; });
}

Rat Poly::constant_term() const
{
    const Exponents zero(vars_.size(), 0);
    const auto it = terms_.find(zero);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::size_t Poly::index_of(const std::string& v) const
{
    const auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) {
        return vars_.size();
    }
    return static_cast<std::size_t>(it - vars_.begin());
}

bool Poly::declares(const std::string& v) const { return index_of(v) < vars_.size(); }

bool Poly::uses(const std::string& v) const
{
    const std::size_t i = index_of(v);
    if (i == vars_.size()) {
        return false;
    }
    return std::any_of(terms_.begin(), terms_.end(),
                       [i](const auto& t) { return t.first[i] > 0; });
}

std::vector<std::string> Poly::used_vars() const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (std::any_of(terms_.begin(), terms_.end(),
                        [i](const auto& t) { return t.first[i] > 0; })) {
            out.push_back(vars_[i]);
        }
    }
    return out;
}

Poly Poly::remapped(const std::vector<std::string>& ring) const
{
    if (ring == vars_) {
        return *this;
    }
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::lower_bound(ring.begin(), ring.end(), vars_[i]);
        pos[i] = static_cast<std::size_t>(it - ring.begin());
    }
    Poly out;
    out.vars_ = ring;
    for (const auto& [ex, c] : terms_) {
        Exponents nex(ring.size(), 0);
        for (std::size_t i = 0; i < ex.size(); ++i) {
            nex[pos[i]] = ex[i];
        }
        out.terms_.emplace(std::move(nex), c);
    }
    return out;
}

Poly Poly::with_vars(const std::vector<std::string>& extra) const
{
    std::vector<std::string> sorted = extra;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return remapped(merge_vars(vars_, sorted));
}

int Poly::degree(const std::string& v) const
{
    if (terms_.empty()) {
        return -1;
    }
    const std::size_t i = index_of(v);
    if (i == vars_.size()) {
        return 0;
    }
    int d = 0;
    for (const auto& [ex, c] : terms_) {
        d = std::max(d, ex[i]);
    }
    return d;
}

int Poly::total_degree() const
{
    return terms_.empty() ? -1 : std::accumulate(terms_.begin()->first.begin(),
                                                 terms_.begin()->first.end(), 0);
}

int Poly::total_degree_in(const std::vector<std::string>& subset) const
{
    if (terms_.empty()) {
        return -1;
    }
    int best = 0;
    for (const auto& [ex, c] : terms_) {
        int d = 0;
        for (const auto& v : subset) {
            const std::size_t i = index_of(v);
            if (i < vars_.size()) {
                d += ex[i];
            }
        }
        best = std::max(best, d);
    }
    return best;
}

bool Poly::is_homogeneous_in(const std::vector<std::string>& subset, int degree) const
{
    for (const auto& [ex, c] : terms_) {
        int d = 0;
        for (const auto& v : subset) {
            const std::size_t i = index_of(v);
            if (i < vars_.size()) {
                d += ex[i];
            }
        }
        if (d != degree) {
            return false;
        }
    }
    return true;
}

Rat Poly::leading_coefficient() const
{
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::map<std::string, int> Poly::leading_monomial() const
{
    std::map<std::string, int> out;
    if (terms_.empty()) {
        return out;
    }
    const auto& ex = terms_.begin()->first;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (ex[i] > 0) {
            out[vars_[i]] = ex[i];
        }
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.vars_ != vars_) {
        const auto ring = merge_vars(vars_, o.vars_);
        *this = remapped(ring);
        return *this += o.remapped(ring);
    }
    for (const auto& [ex, c] : o.terms_) {
        auto it = terms_.find(ex);
        if (it == terms_.end()) {
            terms_.emplace(ex, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [ex, c] : r.terms_) {
        c = -c;
    }
    return r;
}

Poly& Poly::operator*=(const Rat& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [ex, v] : terms_) {
        v *= c;
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.vars_ != b.vars_) {
        const auto ring = merge_vars(a.vars_, b.vars_);
        return a.remapped(ring) * b.remapped(ring);
    }
    Poly out;
    out.vars_ = a.vars_;
    Poly::Exponents ex(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < ex.size(); ++i) {
                ex[i] = ea[i] + eb[i];
            }
            auto it = out.terms_.find(ex);
            if (it == out.terms_.end()) {
                out.terms_.emplace(ex, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) {
                    out.terms_.erase(it);
                }
            }
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly Poly::pow(int exponent) const
{
    if (exponent < 0) {
        throw NegativeExponent("Poly::pow with negative exponent " + std::to_string(exponent));
    }
    Poly result = constant(Rat(1), vars_);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

Poly Poly::partial(const std::string& v) const
{
    const std::size_t i = index_of(v);
    if (i == vars_.size()) {
        throw UnknownVariable("variable '" + v + "' is not declared in this polynomial ring");
    }
    Poly out;
    out.vars_ = vars_;
    for (const auto& [ex, c] : terms_) {
        if (ex[i] == 0) {
            continue;
        }
        Exponents nex = ex;
        nex[i] -= 1;
        out.terms_.emplace(std::move(nex), c * Rat(ex[i]));
    }
    return out;
}

std::vector<Poly> Poly::coefficients_in(const std::string& v) const
{
    const std::size_t i = index_of(v);
    if (i == vars_.size()) {
        return terms_.empty() ? std::vector<Poly>{} : std::vector<Poly>{*this};
    }
    std::vector<Poly> out(static_cast<std::size_t>(std::max(degree(v), -1) + 1));
    for (auto& c : out) {
        c.vars_ = vars_;
    }
    for (const auto& [ex, c] : terms_) {
        Exponents nex = ex;
        const int k = nex[i];
        nex[i] = 0;
        out[static_cast<std::size_t>(k)].terms_.emplace(std::move(nex), c);
    }
    return out;
}

Poly Poly::coefficient_of(const std::string& v, int power) const
{
    const auto cs = coefficients_in(v);
    if (power < 0 || static_cast<std::size_t>(power) >= cs.size()) {
        return constant(Rat(0), vars_);
    }
    return cs[static_cast<std::size_t>(power)];
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, const std::string& v)
{
    Poly out = constant(Rat(0), {v});
    Poly x = var(v);
    Poly xk = constant(Rat(1), {v});
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) {
            out += coeffs[k] * xk;
        }
        if (k + 1 < coeffs.size()) {
            xk *= x;
        }
    }
    return out;
}

Poly Poly::subs(const std::string& v, const Poly& value) const
{
    return subs(std::map<std::string, Poly>{{v, value}});
}

Poly Poly::subs(const std::map<std::string, Poly>& values) const
{
    std::vector<std::size_t> bound;
    std::vector<const Poly*> images;
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = values.find(vars_[i]);
        if (it != values.end()) {
            bound.push_back(i);
            images.push_back(&it->second);
        } else {
            keep.push_back(vars_[i]);
        }
    }
    if (bound.empty()) {
        return *this;
    }
    std::vector<std::map<int, Poly>> powers(bound.size());
    auto power_of = [&](std::size_t k, int e) -> const Poly& {
        auto& cache = powers[k];
        auto it = cache.find(e);
        if (it == cache.end()) {
            it = cache.emplace(e, images[k]->pow(e)).first;
        }
        return it->second;
    };
    Poly out = constant(Rat(0), keep);
    for (const auto& [ex, c] : terms_) {
        std::map<std::string, int> rest;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (ex[i] > 0 && std::find(bound.begin(), bound.end(), i) == bound.end()) {
                rest[vars_[i]] = ex[i];
            }
        }
        Poly term = monomial(c, rest);
        for (std::size_t k = 0; k < bound.size(); ++k) {
            const int e = ex[bound[k]];
            if (e > 0) {
                term = term * power_of(k, e);
            }
        }
        out += term;
    }
    return out;
}

Poly Poly::eval(const std::map<std::string, Rat>& values) const
{
    std::map<std::string, Poly> images;
    for (const auto& [k, v] : values) {
        images.emplace(k, Poly(v));
    }
    return subs(images);
}

Rat Poly::content() const
{
    if (terms_.empty()) {
        return Rat(0);
    }
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [ex, c] : terms_) {
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = lcm(den_lcm, c.den());
    }
    Rat result(num_gcd, den_lcm);
    return leading_coefficient().sign() < 0 ? -result : result;
}

Poly Poly::primitive() const
{
    if (terms_.empty()) {
        return *this;
    }
    Poly r = *this;
    r *= content().inverse();
    return r;
}

std::string Poly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [ex, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (ex[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += vars_[i];
            if (ex[i] > 1) {
                mono += "^" + std::to_string(ex[i]);
            }
        }
        const Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << mono;
        } else {
            os << a.str() << "*" << mono;
        }
    }
    return os.str();
}

bool operator==(const Poly& a, const Poly& b)
{
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    if (a.vars_ == b.vars_) {
        return a.terms_ == b.terms_;
    }
    const auto ring = merge_vars(a.vars_, b.vars_);
    return a.remapped(ring).terms_ == b.remapped(ring).terms_;
}

bool operator<(const Poly& a, const Poly& b)
{
    if (a.total_degree() != b.total_degree()) {
        return a.total_degree() < b.total_degree();
    }
    return a.str() < b.str();
}

Poly divide_exact(const Poly& num, const Poly& den)
{
    if (den.is_zero()) {
        throw ZeroDenominator("exact division by the zero polynomial");
    }
    if (den.is_constant()) {
        return num * den.constant_term().inverse();
    }
    const auto ring = merge_vars(num.vars_, den.vars_);
    Poly r = num.remapped(ring);
    const Poly d = den.remapped(ring);
    Poly q = Poly::constant(Rat(0), ring);
    const auto& [dex, dc] = *d.terms_.begin();
    const Rat dinv = dc.inverse();
    while (!r.terms_.empty()) {
        const auto& [rex, rc] = *r.terms_.begin();
        Poly::Exponents mex(ring.size());
        for (std::size_t i = 0; i < ring.size(); ++i) {
            mex[i] = rex[i] - dex[i];
            if (mex[i] < 0) {
                throw InexactDivision("polynomial division is not exact: (" + num.str() + ") / (" +
                                      den.str() + ")");
            }
        }
        Poly m;
        m.vars_ = ring;
        m.terms_.emplace(std::move(mex), rc * dinv);
        r -= m * d;
        q += m;
    }
    return q;
}

bool divides(const Poly& d, const Poly& p)
{
    try {
        (void)divide_exact(p, d);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

namespace {

using Univariate = std::vector<Poly>;

void trim(Univariate& u)
{
    while (!u.empty() && u.back().is_zero()) {
        u.pop_back();
    }
}

Poly content_of(const Univariate& u)
{
    Poly g;
    for (const auto& c : u) {
        g = gcd(g, c);
        if (g.is_one()) {
            break;
        }
    }
    return g;
}

Univariate primitive_part(const Univariate& u)
{
    const Poly c = content_of(u);
    Univariate out;
    out.reserve(u.size());
    for (const auto& x : u) {
        out.push_back(divide_exact(x, c));
    }
    return out;
}

// Pseudo-remainder of a by b in the main variable.
Univariate pseudo_remainder(Univariate a, const Univariate& b)
{
    const std::size_t db = b.size() - 1;
    const Poly& lb = b.back();
    trim(a);
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t da = a.size() - 1;
        const Poly la = a.back();
        for (auto& c : a) {
            c = c * lb;
        }
        const std::size_t shift = da - db;
        for (std::size_t k = 0; k <= db; ++k) {
            a[k + shift] -= la * b[k];
        }
        trim(a);
    }
    return a;
}

}  // namespace

namespace {

// gcd(g, c_0, c_1, ...), stopping early once it is a constant.
Poly fold_gcd(Poly g, const Univariate& coeffs)
{
    for (const auto& c : coeffs) {
        if (g.is_constant()) {
            break;
        }
        g = gcd(g, c);
    }
    return g;
}

// Primitive part in v with integer-primitive overall scaling.
Univariate normalized(const Univariate& u, const std::string& v)
{
    return Poly::from_coefficients(primitive_part(u), v).primitive().with_vars({v}).coefficients_in(v);
}

}  // namespace

Poly gcd(const Poly& a_in, const Poly& b_in)
{
    if (a_in.is_zero()) {
        return b_in.primitive();
    }
    if (b_in.is_zero()) {
        return a_in.primitive();
    }
    if (a_in.is_constant() || b_in.is_constant()) {
        return Poly(1);
    }
    const Poly a = a_in.primitive();
    const Poly b = b_in.primitive();
    const auto ua = a.used_vars();
    const auto ub = b.used_vars();
    // A variable used on one side only cannot divide the gcd.
    for (const auto& v : ua) {
        if (!b.uses(v)) {
            return fold_gcd(b, a.coefficients_in(v)).primitive();
        }
    }
    for (const auto& v : ub) {
        if (!a.uses(v)) {
            return fold_gcd(a, b.coefficients_in(v)).primitive();
        }
    }
    std::string v = ua.front();
    int best = -1;
    for (const auto& c : ua) {
        const int d = std::max(a.degree(c), b.degree(c));
        if (best < 0 || d < best) {
            best = d;
            v = c;
        }
    }
    Univariate ca = a.coefficients_in(v);
    Univariate cb = b.coefficients_in(v);
    const Poly cont = gcd(content_of(ca), content_of(cb));
    Univariate x = normalized(ca, v);
    Univariate y = normalized(cb, v);
    if (x.size() < y.size()) {
        std::swap(x, y);
    }
    while (!y.empty()) {
        if (y.size() == 1) {
            // y is a nonzero element of the coefficient ring; primitive => unit.
            x = Univariate{Poly(1)};
            break;
        }
        Univariate r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.empty() ? Univariate{} : normalized(r, v);
    }
    return (cont * Poly::from_coefficients(x, v)).primitive();
}

Poly Poly::parse(std::string_view text)
{
    return detail::ExprParser<Poly>(text, [](const Poly& a, const Poly& b) -> std::optional<Poly> {
               if (!b.is_constant() || b.is_zero()) {
                   return std::nullopt;
               }
               return a * b.constant_term().inverse();
           }).run();
}

}  // namespace degenlift
