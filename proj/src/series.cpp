#include "degenlift/series.hpp"

#include <algorithm>
#include <sstream>

#include "degenlift/errors.hpp"

namespace degenlift {

std::string Truncation::str() const
{
    std::ostringstream os;
    os << "(s:" << s << ", t:" << t << ")";
    return os.str();
}

Series::Series(Truncation tr, const RatFunc& constant) : tr_(tr)
{
    set(0, 0, constant);
}

Series Series::s(Truncation tr)
{
    if (tr.s < 0) {
        throw InvalidArgument("s is not a series variable in truncation " + tr.str());
    }
    Series r(tr);
    r.set(1, 0, RatFunc(1));
    return r;
}

Series Series::t(Truncation tr)
{
    if (tr.t < 0) {
        throw InvalidArgument("t is not a series variable in truncation " + tr.str());
    }
    Series r(tr);
    r.set(0, 1, RatFunc(1));
    return r;
}

RatFunc Series::coefficient(int i, int j) const
{
    const auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? RatFunc() : it->second;
}

void Series::set(int i, int j, const RatFunc& c)
{
    if (i < 0 || j < 0) {
        throw InvalidArgument("negative series index");
    }
    if (!tr_.keeps(i, j)) {
        return;
    }
    if (c.is_zero()) {
        coeffs_.erase({i, j});
    } else {
        coeffs_[{i, j}] = c;
    }
}

int Series::t_valuation() const
{
    int v = -1;
    for (const auto& [k, c] : coeffs_) {
        if (v < 0 || k.second < v) {
            v = k.second;
        }
    }
    return v;
}

int Series::s_valuation() const
{
    int v = -1;
    for (const auto& [k, c] : coeffs_) {
        if (v < 0 || k.first < v) {
            v = k.first;
        }
    }
    return v;
}

void Series::require_same(const Series& o) const
{
    if (!(tr_ == o.tr_)) {
        throw TruncationMismatch("series truncations differ: " + tr_.str() + " vs " +
                                 o.tr_.str());
    }
}

Series& Series::operator+=(const Series& o)
{
    require_same(o);
    for (const auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) {
                coeffs_.erase(it);
            }
        }
    }
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series Series::operator-() const
{
    Series r = *this;
    for (auto& [k, c] : r.coeffs_) {
        c = -c;
    }
    return r;
}

Series& Series::operator*=(const RatFunc& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs_) {
        v *= c;
    }
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    a.require_same(b);
    Series out(a.tr_);
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            const int i = ka.first + kb.first;
            const int j = ka.second + kb.second;
            if (!out.tr_.keeps(i, j)) {
                continue;
            }
            auto it = out.coeffs_.find({i, j});
            if (it == out.coeffs_.end()) {
                out.coeffs_.emplace(Series::Key{i, j}, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) {
                    out.coeffs_.erase(it);
                }
            }
        }
    }
    return out;
}

Series& Series::operator*=(const Series& o)
{
    *this = *this * o;
    return *this;
}

Series Series::pow(int exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Series result(tr_, RatFunc(1));
    Series base = *this;
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

Series Series::inverse() const
{
    const RatFunc c0 = coefficient(0, 0);
    if (c0.is_zero()) {
        throw NotAUnit("series " + str() + " has zero constant term");
    }
    const RatFunc c0inv = c0.inverse();
    // Solve (u * v)_{ij} = [i = j = 0] in order of increasing total degree.
    Series v(tr_);
    const int smax = std::max(tr_.s, 0);
    const int tmax = std::max(tr_.t, 0);
    for (int total = 0; total <= smax + tmax; ++total) {
        for (int i = std::min(total, smax); i >= 0; --i) {
            const int j = total - i;
            if (j > tmax) {
                break;
            }
            RatFunc acc = (i == 0 && j == 0) ? RatFunc(1) : RatFunc();
            for (const auto& [k, c] : coeffs_) {
                if ((k.first == 0 && k.second == 0) || k.first > i || k.second > j) {
                    continue;
                }
                const auto it = v.coeffs_.find({i - k.first, j - k.second});
                if (it != v.coeffs_.end()) {
                    acc -= c * it->second;
                }
            }
            v.set(i, j, acc * c0inv);
        }
    }
    return v;
}

Series Series::t_slice(int j) const
{
    Series r(Truncation{tr_.s, -1});
    for (const auto& [k, c] : coeffs_) {
        if (k.second == j) {
            r.coeffs_.emplace(Key{k.first, 0}, c);
        }
    }
    return r;
}

Series Series::compose_s(const Series& sigma) const
{
    if (tr_.t != sigma.tr_.t) {
        throw TruncationMismatch("compose_s: t truncations differ: " + tr_.str() + " vs " +
                                 sigma.tr_.str());
    }
    if (tr_.s >= 0 && !sigma.coefficient(0, 0).is_zero()) {
        throw InvalidArgument("compose_s: substituted series must have zero constant term");
    }
    Series out(sigma.tr_);
    Series power(sigma.tr_, RatFunc(1));
    const int smax = std::max(tr_.s, 0);
    for (int i = 0; i <= smax; ++i) {
        Series slice(sigma.tr_);
        for (const auto& [k, c] : coeffs_) {
            if (k.first == i) {
                slice.set(0, k.second, c);
            }
        }
        if (!slice.is_zero()) {
            out += slice * power;
        }
        if (i < smax) {
            power *= sigma;
        }
    }
    return out;
}

Series Series::truncated(Truncation tr) const
{
    if (tr.s > tr_.s || tr.t > tr_.t) {
        throw TruncationMismatch("cannot refine truncation " + tr_.str() + " to " + tr.str());
    }
    Series r(tr);
    for (const auto& [k, c] : coeffs_) {
        r.set(k.first, k.second, c);
    }
    return r;
}

RatFunc Series::to_ratfunc() const
{
    RatFunc acc;
    for (const auto& [k, c] : coeffs_) {
        acc += c * RatFunc(Poly::monomial(Rat(1), {{"s", k.first}, {"t", k.second}}));
    }
    return acc;
}

Series Series::map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const
{
    Series r(tr_);
    for (const auto& [k, c] : coeffs_) {
        r.set(k.first, k.second, fn(c));
    }
    return r;
}

std::string Series::str() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.str() << ")";
        if (k.first > 0) {
            os << "*s^" << k.first;
        }
        if (k.second > 0) {
            os << "*t^" << k.second;
        }
    }
    os << " + O" << tr_.str();
    return os.str();
}

Series poly_substitute(const Poly& p, const std::map<std::string, Series>& bindings,
                       Truncation tr)
{
    for (const auto& [v, b] : bindings) {
        if (!(b.truncation() == tr)) {
            throw TruncationMismatch("binding for " + v + " has truncation " +
                                     b.truncation().str() + ", expected " + tr.str());
        }
    }
    const auto& vars = p.vars();
    std::vector<const Series*> images(vars.size(), nullptr);
    std::vector<Series> implicit;
    implicit.reserve(2);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto it = bindings.find(vars[i]);
        if (it != bindings.end()) {
            images[i] = &it->second;
        } else if (vars[i] == "s" && tr.s >= 0) {
            implicit.push_back(Series::s(tr));
            images[i] = &implicit.back();
        } else if (vars[i] == "t" && tr.t >= 0) {
            implicit.push_back(Series::t(tr));
            images[i] = &implicit.back();
        }
    }
    // Group terms by the exponents of the substituted variables.
    std::map<Poly::Exponents, Poly> groups;
    for (const auto& [ex, c] : p.terms()) {
        Poly::Exponents key(vars.size(), 0);
        std::map<std::string, int> rest;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (images[i] != nullptr) {
                key[i] = ex[i];
            } else if (ex[i] > 0) {
                rest[vars[i]] = ex[i];
            }
        }
        groups[key] += Poly::monomial(c, rest);
    }
    std::vector<std::map<int, Series>> cache(vars.size());
    auto power_of = [&](std::size_t i, int e) -> const Series& {
        auto it = cache[i].find(e);
        if (it == cache[i].end()) {
            it = cache[i].emplace(e, images[i]->pow(e)).first;
        }
        return it->second;
    };
    Series out(tr);
    for (const auto& [key, coeff] : groups) {
        Series term(tr, RatFunc(coeff));
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (key[i] > 0) {
                term *= power_of(i, key[i]);
            }
        }
        out += term;
    }
    return out;
}

Series to_series(const Poly& p, Truncation tr) { return poly_substitute(p, {}, tr); }

Series to_series(const RatFunc& r, Truncation tr)
{
    const Series n = to_series(r.num(), tr);
    if (r.den().is_constant()) {
        return n * RatFunc(r.den().constant_term().inverse());
    }
    return n * to_series(r.den(), tr).inverse();
}

}  // namespace degenlift
