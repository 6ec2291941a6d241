#include "degenlift/lines.hpp"

#include <algorithm>
#include <set>

#include "degenlift/errors.hpp"
#include "degenlift/parallel.hpp"

namespace degenlift {

namespace {

std::vector<Rat> primitive_integer(std::vector<Rat> v)
{
    mpz_class g = 0;
    mpz_class l = 1;
    for (const auto& x : v) {
        g = gcd(g, x.num());
        l = lcm(l, x.den());
    }
    if (g == 0) {
        return v;
    }
    Rat scale(l, g);
    for (const auto& x : v) {
        if (!x.is_zero()) {
            if (x.sign() < 0) {
                scale = -scale;
            }
            break;
        }
    }
    for (auto& x : v) {
        x *= scale;
    }
    return v;
}

}  // namespace

bool Line::contains(const Point& pt) const
{
    if (pt.size() != basis.front().size()) {
        return false;
    }
    for (const auto& eq : equations) {
        Rat acc(0);
        for (std::size_t i = 0; i < pt.size(); ++i) {
            acc += eq[i] * pt[i];
        }
        if (!acc.is_zero()) {
            return false;
        }
    }
    return true;
}

Point Line::meet_coordinate(int coordinate) const
{
    const auto c = static_cast<std::size_t>(coordinate);
    const Rat& a = p[c];
    const Rat& b = q[c];
    if (a.is_zero() && b.is_zero()) {
        throw InvalidLine("line lies in the hyperplane of coordinate " + std::to_string(coordinate));
    }
    Point out(p.size(), Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = b * p[i] - a * q[i];
    }
    return normalize_point(out);
}

std::vector<Poly> Line::equation_polys(const std::vector<std::string>& coords) const
{
    std::vector<Poly> out;
    for (const auto& eq : equations) {
        Poly acc;
        for (std::size_t i = 0; i < eq.size(); ++i) {
            acc += Poly(eq[i]) * Poly::var(coords[i]);
        }
        out.push_back(acc);
    }
    return out;
}

namespace {

// Linear form in the given coordinate order (not the alphabetical term order).
std::string linear_form_str(const std::vector<Rat>& eq, const std::vector<std::string>& coords)
{
    std::string out;
    for (std::size_t i = 0; i < eq.size(); ++i) {
        if (eq[i].is_zero()) {
            continue;
        }
        const Rat a = eq[i].abs();
        if (out.empty()) {
            out += eq[i].sign() < 0 ? "-" : "";
        } else {
            out += eq[i].sign() < 0 ? " - " : " + ";
        }
        out += (a.is_one() ? "" : a.str() + "*") + coords[i];
    }
    return out;
}

}  // namespace

std::string Line::str(const std::vector<std::string>& coords) const
{
    std::string out;
    for (const auto& eq : equations) {
        out += (out.empty() ? "" : ", ") + linear_form_str(eq, coords) + " = 0";
    }
    return out;
}

bool operator<(const Line& a, const Line& b)
{
    for (std::size_t i = 0; i < a.basis.size() && i < b.basis.size(); ++i) {
        for (std::size_t j = 0; j < a.basis[i].size() && j < b.basis[i].size(); ++j) {
            const auto c = a.basis[i][j] <=> b.basis[i][j];
            if (c != 0) {
                return c < 0;
            }
        }
    }
    return false;
}

Line line_through(const Point& p, const Point& q)
{
    if (p.size() != q.size() || p.size() < 3) {
        throw InvalidLine("points must have the same dimension (at least 3 coordinates)");
    }
    Matrix<Rat> m{p, q};
    if (rank(m) < 2) {
        throw InvalidLine("points " + point_str(p) + " and " + point_str(q) +
                          " do not span a line");
    }
    Line line;
    line.p = normalize_point(p);
    line.q = normalize_point(q);
    line.basis = m;
    rref(line.basis);
    for (auto& v : nullspace(line.basis, p.size())) {
        line.equations.push_back(primitive_integer(std::move(v)));
    }
    return line;
}

bool collinear(const Point& p, const Point& q, const Point& r)
{
    return rank(Matrix<Rat>{p, q, r}) < 3;
}

int line_component(const FamilySpec& spec, const Line& line)
{
    int found = -1;
    for (std::size_t k = 0; k < spec.factors.size(); ++k) {
        const int c = spec.factor_coordinate(k);
        if (c < 0) {
            continue;
        }
        const auto i = static_cast<std::size_t>(c);
        if (line.p[i].is_zero() && line.q[i].is_zero()) {
            if (found >= 0) {
                throw InvalidLine("line " + line.str(spec.coordinates) +
                                  " lies in a deeper stratum");
            }
            found = static_cast<int>(k);
        }
    }
    if (found < 0) {
        throw InvalidLine("line " + line.str(spec.coordinates) + " lies in no component");
    }
    return found;
}

bool torically_transverse(const FamilySpec& spec, const Line& line)
{
    const int comp = line_component(spec, line);
    const int comp_coord = spec.factor_coordinate(static_cast<std::size_t>(comp));
    for (int c = 0; c <= spec.n; ++c) {
        if (c == comp_coord) {
            continue;
        }
        Point pt;
        try {
            pt = line.meet_coordinate(c);
        } catch (const InvalidLine&) {
            return false;
        }
        for (int o = 0; o <= spec.n; ++o) {
            if (o != c && o != comp_coord && pt[static_cast<std::size_t>(o)].is_zero()) {
                return false;
            }
        }
    }
    return true;
}

const char* to_string(HitFlag f)
{
    switch (f) {
    case HitFlag::InS:
        return "in-S";
    case HitFlag::NotInS:
        return "not-in-S";
    case HitFlag::Deeper:
        return "deeper";
    }
    return "?";
}

const char* to_string(LineClass c)
{
    switch (c) {
    case LineClass::PrelogOk:
        return "prelog-ok";
    case LineClass::PrelogFail:
        return "prelog-fail";
    case LineClass::Class1:
        return "class1";
    case LineClass::Class2I:
        return "class2I";
    case LineClass::Class2II:
        return "class2II";
    }
    return "?";
}

bool IncidenceProfile::has(LineClass c) const
{
    return std::find(tags.begin(), tags.end(), c) != tags.end();
}

IncidenceProfile incidence_profile(const FamilySpec& spec, const Line& line)
{
    IncidenceProfile prof;
    prof.component = line_component(spec, line);
    bool all_in_s = true;
    for (int k = 0; k < static_cast<int>(spec.factors.size()); ++k) {
        const int c = spec.factor_coordinate(static_cast<std::size_t>(k));
        if (k == prof.component || c < 0) {
            continue;
        }
        DivisorHit hit;
        hit.factor = k;
        hit.point = line.meet_coordinate(c);
        for (int o = 0; o < static_cast<int>(spec.factors.size()); ++o) {
            const int oc = spec.factor_coordinate(static_cast<std::size_t>(o));
            if (o != k && o != prof.component && oc >= 0 &&
                hit.point[static_cast<std::size_t>(oc)].is_zero()) {
                hit.deeper.push_back(o);
            }
        }
        if (!hit.deeper.empty()) {
            hit.flag = HitFlag::Deeper;
        } else {
            std::map<std::string, Rat> at;
            for (int i = 0; i <= spec.n; ++i) {
                at[spec.coordinates[static_cast<std::size_t>(i)]] =
                    hit.point[static_cast<std::size_t>(i)];
            }
            hit.flag = spec.f.eval(at).is_zero() ? HitFlag::InS : HitFlag::NotInS;
        }
        all_in_s = all_in_s && hit.flag == HitFlag::InS;
        prof.hits.push_back(std::move(hit));
    }
    prof.tags.push_back(all_in_s ? LineClass::PrelogOk : LineClass::PrelogFail);
    return prof;
}

namespace {

std::vector<std::vector<Point>> edge_points(const FamilySpec& spec, const Stratum& comp,
                                            bool allow_partial)
{
    std::vector<std::vector<Point>> out;
    for (const auto& e : component_edges(spec, comp)) {
        const EdgeLocus loc = singular_points_on_edge(spec, e);
        if (loc.unresolved > 0 && !allow_partial) {
            throw IncompleteLocus(std::to_string(loc.unresolved) +
                                  " singular point(s) on " + e.str(spec) + " are not rational");
        }
        std::vector<Point> pts;
        for (const auto& sp : loc.points) {
            pts.push_back(sp.point);
        }
        out.push_back(std::move(pts));
    }
    return out;
}

void require_shape(const FamilySpec& spec, const Stratum& comp, int degree, const char* what)
{
    if (spec.n != 3 || spec.degree != degree) {
        throw InvalidFamily(std::string(what) + " needs n = 3 and degree " +
                            std::to_string(degree));
    }
    if (comp.factors.size() != 1) {
        throw InvalidStratum(std::string(what) + " needs a component");
    }
}

std::vector<Line> sorted_unique(std::vector<Line> lines)
{
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

}  // namespace

std::vector<Line> prelog_lines_K3(const FamilySpec& spec, const Stratum& comp,
                                  bool allow_partial, const std::vector<int>& edge_order)
{
    require_shape(spec, comp, 4, "prelog_lines_K3");
    auto pts = edge_points(spec, comp, allow_partial);
    if (pts.size() != 3) {
        throw InvalidFamily("prelog_lines_K3 needs three edges in the component");
    }
    if (!edge_order.empty()) {
        std::vector<int> check = edge_order;
        std::sort(check.begin(), check.end());
        if (check != std::vector<int>{0, 1, 2}) {
            throw InvalidArgument("edge_order must be a permutation of 0, 1, 2");
        }
        auto copy = pts;
        for (std::size_t i = 0; i < 3; ++i) {
            pts[i] = copy[static_cast<std::size_t>(edge_order[i])];
        }
    }
    struct Pair {
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < pts[0].size(); ++i) {
        for (std::size_t j = 0; j < pts[1].size(); ++j) {
            pairs.push_back({i, j});
        }
    }
    auto found = parallel_map(pairs, [&](const Pair& pr) {
        std::vector<Line> out;
        const Point& a = pts[0][pr.i];
        const Point& b = pts[1][pr.j];
        for (const auto& c : pts[2]) {
            if (collinear(a, b, c)) {
                Line l = line_through(a, b);
                if (torically_transverse(spec, l)) {
                    out.push_back(std::move(l));
                }
            }
        }
        return out;
    });
    std::vector<Line> lines;
    for (auto& v : found) {
        for (auto& l : v) {
            lines.push_back(std::move(l));
        }
    }
    return sorted_unique(std::move(lines));
}

std::vector<Line> prelog_lines_cubic(const FamilySpec& spec, const Stratum& comp,
                                     bool allow_partial)
{
    require_shape(spec, comp, 3, "prelog_lines_cubic");
    const auto pts = edge_points(spec, comp, allow_partial);
    if (pts.size() != 2) {
        throw InvalidFamily("prelog_lines_cubic needs two gluing edges in the component");
    }
    std::vector<Line> lines;
    for (const auto& a : pts[0]) {
        for (const auto& b : pts[1]) {
            Line l = line_through(a, b);
            if (torically_transverse(spec, l)) {
                lines.push_back(std::move(l));
            }
        }
    }
    return sorted_unique(std::move(lines));
}

IncidenceProfile classify_quintic_line(const Line& line, const FamilySpec& spec)
{
    if (spec.n != 4) {
        throw InvalidFamily("classify_quintic_line needs a family in P^4");
    }
    IncidenceProfile prof = incidence_profile(spec, line);
    std::set<std::vector<int>> strata;
    for (const auto& hit : prof.hits) {
        for (int o : hit.deeper) {
            std::vector<int> key{prof.component, hit.factor, o};
            std::sort(key.begin(), key.end());
            strata.insert(key);
        }
    }
    if (strata.empty()) {
        prof.tags.push_back(LineClass::Class1);
    } else if (strata.size() >= 2) {
        prof.tags.push_back(LineClass::Class2I);
    } else {
        prof.tags.push_back(LineClass::Class2II);
    }
    return prof;
}

}  // namespace degenlift
