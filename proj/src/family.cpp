#include "degenlift/family.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "degenlift/errors.hpp"

namespace degenlift {

namespace {

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

bool reserved(const std::string& s) { return s == "s" || s == "t" || s.rfind("lift_", 0) == 0; }

}  // namespace

void FamilySpec::validate() const
{
    if (n < 2) {
        throw InvalidFamily("ambient dimension must be at least 2, got " + std::to_string(n));
    }
    if (degree < 2) {
        throw InvalidFamily("degree must be at least 2, got " + std::to_string(degree));
    }
    if (static_cast<int>(coordinates.size()) != n + 1) {
        throw InvalidFamily("expected " + std::to_string(n + 1) + " coordinates, got " +
                            std::to_string(coordinates.size()));
    }
    std::set<std::string> seen;
    for (const auto& c : coordinates) {
        if (!valid_identifier(c) || reserved(c)) {
            throw InvalidFamily("invalid coordinate name '" + c + "'");
        }
        if (!seen.insert(c).second) {
            throw InvalidFamily("duplicate coordinate '" + c + "'");
        }
    }
    for (const auto& p : params) {
        if (!valid_identifier(p) || reserved(p)) {
            throw InvalidFamily("invalid parameter name '" + p + "'");
        }
        if (!seen.insert(p).second) {
            throw InvalidFamily("parameter '" + p + "' clashes with another name");
        }
    }
    if (!chart.empty() && coordinate_index(chart) < 0) {
        throw InvalidFamily("chart coordinate '" + chart + "' is not a coordinate");
    }
    if (static_cast<int>(factors.size()) != degree) {
        throw InvalidFamily("degree " + std::to_string(degree) + " needs " +
                            std::to_string(degree) + " linear factors, got " +
                            std::to_string(factors.size()));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const Poly& a = factors[k];
        if (a.is_zero()) {
            throw InvalidFamily("linear factor " + std::to_string(k + 1) + " is zero");
        }
        for (const auto& v : a.used_vars()) {
            if (coordinate_index(v) < 0) {
                throw InvalidFamily("linear factor " + a.str() + " involves non-coordinate '" + v +
                                    "'");
            }
        }
        if (!a.is_homogeneous_in(coordinates, 1)) {
            throw InvalidFamily("factor " + a.str() + " is not a linear form");
        }
    }
    for (const auto& v : f.used_vars()) {
        if (!seen.count(v)) {
            throw UnknownVariable("f involves undeclared variable '" + v + "'");
        }
    }
    if (f.is_zero()) {
        throw InvalidFamily("f is zero");
    }
    if (!f.is_homogeneous_in(coordinates, degree)) {
        throw NonHomogeneous("f is not homogeneous of degree " + std::to_string(degree) +
                             " in the coordinates");
    }
}

int FamilySpec::coordinate_index(const std::string& name) const
{
    const auto it = std::find(coordinates.begin(), coordinates.end(), name);
    return it == coordinates.end() ? -1 : static_cast<int>(it - coordinates.begin());
}

int FamilySpec::factor_coordinate(std::size_t k) const
{
    const Poly& a = factors.at(k);
    if (a.size() != 1) {
        return -1;
    }
    const auto used = a.used_vars();
    if (used.size() != 1) {
        return -1;
    }
    return coordinate_index(used.front());
}

int FamilySpec::factor_of_coordinate(int coord) const
{
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factor_coordinate(k) == coord) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

std::string FamilySpec::chart_coordinate() const
{
    return chart.empty() ? coordinates.back() : chart;
}

FamilySpec FamilySpec::specialized(const std::map<std::string, Rat>& values) const
{
    FamilySpec out = *this;
    std::map<std::string, Rat> used;
    for (const auto& [k, v] : values) {
        if (std::find(params.begin(), params.end(), k) == params.end()) {
            throw UnknownVariable("'" + k + "' is not a parameter of the family");
        }
        used.emplace(k, v);
    }
    out.f = f.eval(used);
    out.params.clear();
    for (const auto& p : params) {
        if (!used.count(p)) {
            out.params.push_back(p);
        }
    }
    return out;
}

bool operator==(const FamilySpec& a, const FamilySpec& b)
{
    return a.n == b.n && a.degree == b.degree && a.coordinates == b.coordinates &&
           a.factors == b.factors && a.f == b.f && a.params == b.params &&
           a.chart_coordinate() == b.chart_coordinate();
}

const char* to_string(StratumKind k)
{
    switch (k) {
    case StratumKind::Component:
        return "component";
    case StratumKind::Divisor:
        return "divisor";
    case StratumKind::Edge:
        return "edge";
    case StratumKind::Point:
        return "point";
    }
    return "?";
}

int Stratum::dimension(const FamilySpec& spec) const
{
    return spec.n - static_cast<int>(factors.size());
}

StratumKind Stratum::kind(const FamilySpec& spec) const
{
    const int dim = dimension(spec);
    if (factors.size() == 1) {
        return StratumKind::Component;
    }
    if (dim == 0) {
        return StratumKind::Point;
    }
    if (dim == 1) {
        return StratumKind::Edge;
    }
    return StratumKind::Divisor;
}

std::vector<int> Stratum::free_coordinates(const FamilySpec& spec) const
{
    std::vector<int> zero;
    for (int k : factors) {
        zero.push_back(spec.factor_coordinate(static_cast<std::size_t>(k)));
    }
    std::vector<int> out;
    for (int i = 0; i <= spec.n; ++i) {
        if (std::find(zero.begin(), zero.end(), i) == zero.end()) {
            out.push_back(i);
        }
    }
    return out;
}

std::string Stratum::str(const FamilySpec& spec) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? "=" : "") + spec.factors[static_cast<std::size_t>(factors[i])].str();
    }
    out += "=0}";
    return out;
}

Stratum make_stratum(const FamilySpec& spec, std::vector<int> factors, std::string chart)
{
    std::sort(factors.begin(), factors.end());
    if (factors.empty()) {
        throw InvalidStratum("a stratum needs at least one factor");
    }
    if (std::adjacent_find(factors.begin(), factors.end()) != factors.end()) {
        throw InvalidStratum("repeated factor index in stratum");
    }
    for (int k : factors) {
        if (k < 0 || k >= static_cast<int>(spec.factors.size())) {
            throw InvalidStratum("factor index " + std::to_string(k) + " out of range");
        }
        if (spec.factor_coordinate(static_cast<std::size_t>(k)) < 0) {
            throw InvalidStratum("factor " + spec.factors[static_cast<std::size_t>(k)].str() +
                                 " is not a coordinate; strata need coordinate factors");
        }
    }
    Stratum st{std::move(factors), std::move(chart)};
    if (st.dimension(spec) < 0) {
        throw InvalidStratum("stratum " + st.str(spec) + " is empty");
    }
    if (!st.chart.empty()) {
        const int c = spec.coordinate_index(st.chart);
        const auto fc = st.free_coordinates(spec);
        if (c < 0 || std::find(fc.begin(), fc.end(), c) == fc.end()) {
            throw InvalidStratum("chart '" + st.chart + "' vanishes on " + st.str(spec));
        }
    }
    return st;
}

Stratum component(const FamilySpec& spec, int factor) { return make_stratum(spec, {factor}); }

std::vector<Stratum> component_edges(const FamilySpec& spec, const Stratum& comp)
{
    if (comp.factors.size() != 1) {
        throw InvalidStratum("component_edges needs a component");
    }
    // Edges are the one-dimensional strata containing comp.
    const int need = spec.n - 1;  // number of factors of an edge
    std::vector<int> others;
    for (int k = 0; k < static_cast<int>(spec.factors.size()); ++k) {
        if (k != comp.factors[0] && spec.factor_coordinate(static_cast<std::size_t>(k)) >= 0) {
            others.push_back(k);
        }
    }
    std::vector<Stratum> out;
    const int pick = need - 1;
    if (pick < 0 || pick > static_cast<int>(others.size())) {
        return out;
    }
    std::vector<bool> mask(others.size(), false);
    std::fill(mask.begin(), mask.begin() + pick, true);
    do {
        std::vector<int> idx{comp.factors[0]};
        for (std::size_t i = 0; i < others.size(); ++i) {
            if (mask[i]) {
                idx.push_back(others[i]);
            }
        }
        out.push_back(make_stratum(spec, idx));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end(),
              [](const Stratum& a, const Stratum& b) { return a.factors < b.factors; });
    return out;
}

std::vector<Stratum> all_edges(const FamilySpec& spec)
{
    std::set<std::vector<int>> seen;
    std::vector<Stratum> out;
    for (int k = 0; k < static_cast<int>(spec.factors.size()); ++k) {
        if (spec.factor_coordinate(static_cast<std::size_t>(k)) < 0) {
            continue;
        }
        for (auto& e : component_edges(spec, component(spec, k))) {
            if (seen.insert(e.factors).second) {
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Stratum& a, const Stratum& b) { return a.factors < b.factors; });
    return out;
}

EdgeChart edge_chart(const FamilySpec& spec, const Stratum& edge)
{
    if (edge.dimension(spec) != 1) {
        throw InvalidStratum("stratum " + edge.str(spec) + " is not an edge");
    }
    const auto fc = edge.free_coordinates(spec);
    EdgeChart ec;
    int v = edge.chart.empty() ? -1 : spec.coordinate_index(edge.chart);
    if (v < 0) {
        const int def = spec.coordinate_index(spec.chart_coordinate());
        v = std::find(fc.begin(), fc.end(), def) != fc.end() ? def : fc.back();
    }
    ec.v = v;
    ec.u = fc[0] == v ? fc[1] : fc[0];
    return ec;
}

Poly total_equation(const FamilySpec& spec)
{
    Poly prod(1);
    for (const auto& a : spec.factors) {
        prod *= a;
    }
    return prod + Poly::var("t") * spec.f;
}

Poly restrict_to_stratum(const FamilySpec& spec, const Stratum& st)
{
    if (st.dimension(spec) < 1) {
        throw InvalidStratum("cannot restrict to the zero-dimensional stratum " + st.str(spec) +
                             "; evaluate at the point instead");
    }
    std::map<std::string, Rat> values;
    for (int k : st.factors) {
        values[spec.coordinates[static_cast<std::size_t>(
            spec.factor_coordinate(static_cast<std::size_t>(k)))]] = Rat(0);
    }
    if (!st.chart.empty()) {
        values[st.chart] = Rat(1);
    }
    return spec.f.eval(values);
}

std::vector<Rat> normalize_point(std::vector<Rat> p)
{
    for (std::size_t i = p.size(); i-- > 0;) {
        if (!p[i].is_zero()) {
            const Rat inv = p[i].inverse();
            for (auto& x : p) {
                x *= inv;
            }
            return p;
        }
    }
    throw InvalidArgument("the zero vector is not a projective point");
}

std::string point_str(const std::vector<Rat>& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        out += (i ? ", " : "") + p[i].str();
    }
    return out + ")";
}

namespace {

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            fac.emplace_back(p, e);
        }
        if (p > 10000000) {
            break;  // remaining cofactor treated as prime
        }
    }
    if (n > 1) {
        fac.emplace_back(n, 1);
    }
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : fac) {
        const std::size_t m = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < m; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    return out;
}

// Coefficient vector (ascending) of a univariate polynomial over Q.
std::vector<Rat> dense(const Poly& p, const std::string& var)
{
    std::vector<Rat> out(static_cast<std::size_t>(std::max(p.degree(var), 0)) + 1, Rat(0));
    for (const auto& c : p.coefficients_in(var)) {
        if (!c.is_constant()) {
            throw InvalidArgument("rational_roots: polynomial " + p.str() +
                                  " is not univariate in " + var);
        }
    }
    const auto cs = p.coefficients_in(var);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        out[i] = cs[i].constant_term();
    }
    return out;
}

Rat horner(const std::vector<Rat>& c, const Rat& x)
{
    Rat acc(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x + c[i];
    }
    return acc;
}

// Synthetic division by (var - r).
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r)
{
    std::vector<Rat> q(c.size() - 1, Rat(0));
    Rat carry(0);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        carry = carry * r + c[i + 1];
        q[i] = carry;
    }
    return q;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p, const std::string& var)
{
    if (p.is_zero()) {
        throw InvalidArgument("rational_roots of the zero polynomial");
    }
    std::vector<Rat> c = dense(p.primitive(), var);
    std::vector<std::pair<Rat, int>> out;
    int zero_mult = 0;
    while (c.size() > 1 && c.front().is_zero()) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) {
        out.emplace_back(Rat(0), zero_mult);
    }
    if (c.size() <= 1) {
        return out;
    }
    const auto ps = divisors(c.front().num());
    const auto qs = divisors(c.back().num());
    std::set<Rat> candidates;
    for (const auto& a : ps) {
        for (const auto& b : qs) {
            candidates.insert(Rat(a, b));
            candidates.insert(-Rat(a, b));
        }
    }
    for (const auto& r : candidates) {
        int mult = 0;
        while (c.size() > 1 && horner(c, r).is_zero()) {
            c = deflate(c, r);
            ++mult;
        }
        if (mult > 0) {
            out.emplace_back(r, mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

EdgeLocus singular_points_on_edge(const FamilySpec& spec, const Stratum& edge_in)
{
    const Stratum edge = make_stratum(spec, edge_in.factors, edge_in.chart);
    const EdgeChart ec = edge_chart(spec, edge);
    const std::string& u = spec.coordinates[static_cast<std::size_t>(ec.u)];
    const std::string& v = spec.coordinates[static_cast<std::size_t>(ec.v)];
    const Poly g = restrict_to_stratum(spec, make_stratum(spec, edge.factors));
    if (g.is_zero()) {
        throw DegenerateSingularity("f vanishes identically on " + edge.str(spec));
    }
    // Part of g common to all parameter values.
    std::map<std::vector<int>, Poly> slices;
    for (const auto& [ex, c] : g.terms()) {
        std::vector<int> key;
        std::map<std::string, int> mono;
        for (std::size_t i = 0; i < g.vars().size(); ++i) {
            const auto& name = g.vars()[i];
            if (name == u || name == v) {
                mono[name] = ex[i];
            } else {
                key.push_back(ex[i]);
            }
        }
        slices[key] += Poly::monomial(c, mono);
    }
    Poly h;
    for (const auto& [k, s] : slices) {
        h = gcd(h, s);
    }
    EdgeLocus locus;
    int found = 0;
    // Roots at v = 0 and u = 0 are the torus fixed points of the edge.
    const int mult_v = h.degree(u) < 0 ? 0 : h.total_degree() - h.degree(u);
    const Poly hu = h.eval({{v, Rat(1)}});
    int mult_u = 0;
    for (const auto& [r, m] : rational_roots(hu, u)) {
        if (r.is_zero()) {
            mult_u = m;
            continue;
        }
        const Poly lin = Poly::var(u) - Poly(r) * Poly::var(v);
        if (divides(lin * lin, g)) {
            throw DegenerateSingularity("repeated root " + r.str() + " of f on " +
                                        edge.str(spec));
        }
        SingularPoint sp;
        sp.host = edge;
        sp.coordinate = r;
        std::vector<Rat> pt(spec.coordinates.size(), Rat(0));
        pt[static_cast<std::size_t>(ec.u)] = r;
        pt[static_cast<std::size_t>(ec.v)] = Rat(1);
        sp.point = normalize_point(pt);
        locus.points.push_back(sp);
        found += m;
    }
    locus.fixed_point_roots = mult_u + mult_v;
    locus.unresolved = spec.degree - found - locus.fixed_point_roots;
    return locus;
}

bool is_ordinary_singularity(const FamilySpec& spec, const SingularPoint& p)
{
    const Stratum edge = make_stratum(spec, p.host.factors, p.host.chart);
    const EdgeChart ec = edge_chart(spec, edge);
    const auto fc = edge.free_coordinates(spec);
    if (p.point.size() != spec.coordinates.size()) {
        return false;
    }
    for (int i = 0; i <= spec.n; ++i) {
        const bool free = std::find(fc.begin(), fc.end(), i) != fc.end();
        if (!free && !p.point[static_cast<std::size_t>(i)].is_zero()) {
            return false;
        }
    }
    const Rat& pu = p.point[static_cast<std::size_t>(ec.u)];
    const Rat& pv = p.point[static_cast<std::size_t>(ec.v)];
    if (pu.is_zero() || pv.is_zero()) {
        return false;  // torus fixed point
    }
    const std::string& u = spec.coordinates[static_cast<std::size_t>(ec.u)];
    const std::string& v = spec.coordinates[static_cast<std::size_t>(ec.v)];
    const Poly g = restrict_to_stratum(spec, make_stratum(spec, edge.factors));
    const Rat r = pu / pv;
    if (!g.eval({{u, r}, {v, Rat(1)}}).is_zero()) {
        return false;
    }
    return !g.with_vars({u}).partial(u).eval({{u, r}, {v, Rat(1)}}).is_zero();
}

}  // namespace degenlift
