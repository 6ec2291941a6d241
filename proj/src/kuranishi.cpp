#include "degenlift/kuranishi.hpp"

#include <algorithm>
#include <stdexcept>

#include "degenlift/errors.hpp"
#include "degenlift/lifter.hpp"
#include "degenlift/linalg.hpp"
#include "degenlift/parallel.hpp"
#include "degenlift/series.hpp"

namespace degenlift {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

const std::string& name_of(const FamilySpec& spec, int i) { return spec.coordinates[ix(i)]; }

void require_plane(const FamilySpec& spec)
{
    if (spec.n != 3) {
        throw AnsatzInapplicable("local frames need a plane component (n = 3)");
    }
}

// Plane coordinate indices of the component with the given normal coordinate.
std::vector<int> plane_of(const FamilySpec& spec, int normal)
{
    std::vector<int> out;
    for (int i = 0; i <= spec.n; ++i) {
        if (i != normal) {
            out.push_back(i);
        }
    }
    return out;
}

// +1 if u/v is the cyclic edge coordinate c_{m-1}/c_{m+1} of the edge
// {c_m = 0}, -1 if it is the inverse.
int orientation_of(const std::vector<int>& plane, int cross, int u)
{
    const auto m = static_cast<std::size_t>(std::find(plane.begin(), plane.end(), cross) -
                                            plane.begin());
    const int prev = plane[(m + 2) % 3];
    return u == prev ? 1 : -1;
}
}  // namespace

const char* to_string(Decomposition d)
{
    switch (d) {
    case Decomposition::EdgeFirst:
        return "edge-first";
    case Decomposition::NormalFirst:
        return "normal-first";
    case Decomposition::SubstituteFirst:
        return "substitute-first";
    }
    return "?";
}

std::vector<SingularPoint> line_singular_points(const FamilySpec& spec, const Line& line)
{
    require_plane(spec);
    const int comp = line_component(spec, line);
    if (!torically_transverse(spec, line)) {
        throw InvalidLine("line " + line.str(spec.coordinates) +
                          " passes through a torus fixed point");
    }
    std::vector<SingularPoint> out;
    for (const auto& edge : component_edges(spec, component(spec, comp))) {
        const int other = edge.factors[0] == comp ? edge.factors[1] : edge.factors[0];
        const int cross = spec.factor_coordinate(ix(other));
        SingularPoint sp;
        sp.host = edge;
        sp.point = line.meet_coordinate(cross);
        const EdgeChart ec = edge_chart(spec, edge);
        sp.coordinate = sp.point[ix(ec.u)] / sp.point[ix(ec.v)];
        std::map<std::string, Rat> at;
        for (int i = 0; i <= spec.n; ++i) {
            at[name_of(spec, i)] = sp.point[ix(i)];
        }
        if (!spec.f.eval(at).is_zero()) {
            throw InvalidLine("line " + line.str(spec.coordinates) + " meets " + edge.str(spec) +
                              " at " + point_str(sp.point) + ", outside the singular locus");
        }
        if (!is_ordinary_singularity(spec, sp)) {
            throw NotOrdinary("singular point " + point_str(sp.point) + " is not ordinary");
        }
        out.push_back(std::move(sp));
    }
    return out;
}

LocalFrame local_frame(const FamilySpec& spec, const Line& line, const SingularPoint& p,
                       Decomposition order, const std::string& chart)
{
    require_plane(spec);
    LocalFrame fr;
    fr.point = p;
    fr.decomposition = order;
    const int comp = line_component(spec, line);
    fr.normal = spec.factor_coordinate(ix(comp));
    const auto& hf = p.host.factors;
    if (hf.size() != 2 || std::find(hf.begin(), hf.end(), comp) == hf.end()) {
        throw InvalidLine("singular point " + point_str(p.point) +
                          " is not on an edge of the line's component");
    }
    const int other = hf[0] == comp ? hf[1] : hf[0];
    fr.cross = spec.factor_coordinate(ix(other));
    if (!line.contains(p.point)) {
        throw InvalidLine("line " + line.str(spec.coordinates) + " misses " + point_str(p.point));
    }
    const EdgeChart ec = edge_chart(spec, make_stratum(spec, hf, chart));
    fr.u = ec.u;
    fr.v = ec.v;
    if (p.point[ix(fr.v)].is_zero() || p.point[ix(fr.u)].is_zero()) {
        throw InvalidLine("singular point " + point_str(p.point) + " is a torus fixed point");
    }
    fr.alpha = p.point[ix(fr.u)] / p.point[ix(fr.v)];
    fr.orientation = orientation_of(plane_of(spec, fr.normal), fr.cross, fr.u);

    // Direction along the line: any line point off {cross = 0}.
    const Point& other_pt = line.p[ix(fr.cross)].is_zero() ? line.q : line.p;
    fr.slope = RatFunc((other_pt[ix(fr.u)] - fr.alpha * other_pt[ix(fr.v)]) /
                       other_pt[ix(fr.cross)]);

    const std::string& u = name_of(spec, fr.u);
    const std::string& cr = name_of(spec, fr.cross);
    const std::string& nm = name_of(spec, fr.normal);
    fr.F = spec.f.eval({{name_of(spec, fr.v), Rat(1)}});
    fr.E = Poly(1);
    for (std::size_t k = 0; k < spec.factors.size(); ++k) {
        if (static_cast<int>(k) == comp || static_cast<int>(k) == other) {
            continue;
        }
        fr.E *= spec.factors[k].eval({{name_of(spec, fr.v), Rat(1)}});
    }
    const Poly edge_lin = Poly::var(u) - Poly(fr.alpha);
    const Poly Fu = fr.F.with_vars({u, cr, nm});
    switch (order) {
    case Decomposition::EdgeFirst:
    case Decomposition::NormalFirst: {
        const Poly on_edge = Fu.eval({{cr, Rat(0)}, {nm, Rat(0)}});
        if (!divides(edge_lin, on_edge)) {
            throw InvalidLine("f does not vanish at " + point_str(p.point));
        }
        fr.f1 = divide_exact(on_edge, edge_lin);
        const Poly r = Fu - edge_lin * fr.f1;
        if (order == Decomposition::EdgeFirst) {
            fr.f2 = divide_exact(r.eval({{nm, Rat(0)}}), Poly::var(cr));
            fr.f3 = divide_exact(r - Poly::var(cr) * fr.f2, Poly::var(nm));
        } else {
            fr.f3 = divide_exact(r.eval({{cr, Rat(0)}}), Poly::var(nm));
            fr.f2 = divide_exact(r - Poly::var(nm) * fr.f3, Poly::var(cr));
        }
        break;
    }
    case Decomposition::SubstituteFirst: {
        const Poly g = Fu.eval({{u, fr.alpha}});
        fr.f2 = divide_exact(g.eval({{nm, Rat(0)}}), Poly::var(cr));
        fr.f3 = divide_exact(g - Poly::var(cr) * fr.f2, Poly::var(nm));
        fr.f1 = divide_exact(Fu - Poly::var(cr) * fr.f2 - Poly::var(nm) * fr.f3, edge_lin);
        break;
    }
    }
    fr.f4 = RatFunc(fr.f3, fr.E);
    fr.f5 = RatFunc(-(fr.f2 * fr.f3), fr.E);
    fr.origin = {{u, fr.alpha}, {cr, Rat(0)}, {nm, Rat(0)}};
    const auto& at = fr.origin;
    fr.unit_check = RatFunc(fr.f1.eval(at));
    if (fr.unit_check.is_zero()) {
        throw NotOrdinary("f1 vanishes at " + point_str(p.point));
    }
    if (fr.E.eval(at).is_zero()) {
        throw InvalidLine("remaining factors vanish at " + point_str(p.point));
    }
    return fr;
}

ResidueDatum first_order_residue(const LocalFrame& fr)
{
    ResidueDatum rd;
    rd.frame = fr;
    rd.order = 1;
    const RatFunc f4 = fr.f4.eval(fr.origin);
    const RatFunc f5 = fr.f5.eval(fr.origin);
    // b f1(p) + f5(p) = -f4(p) h1(p) with h1 = -slope f1 along the edge.
    rd.b = fr.slope * f4 - f5 / fr.unit_check;
    return rd;
}

namespace {

KuranishiValue assemble(int order, std::vector<ResidueDatum> residues)
{
    KuranishiValue kv;
    kv.order = order;
    for (const auto& r : residues) {
        kv.value += r.frame.weight() * r.b;
    }
    kv.vanishing_condition = kv.value.num().primitive();
    kv.residues = std::move(residues);
    return kv;
}

// Order-k residue at one point, read off the local model XY + tZ along the
// lifted curve.
RatFunc series_residue(const FamilySpec& spec, const LiftResult& lift,
                       const std::vector<RatFunc>& curve, const LocalFrame& fr, int k)
{
    const Truncation tr = Truncation::in_st(k, k);
    const Series sigma = Series::s(tr);
    const Series tt = Series::t(tr);
    const LiftFrame& lf = lift.frame;
    Series s0(tr, RatFunc(1));
    Series s1(tr, RatFunc(1));
    const Point& pt = fr.point.point;
    if (!pt[ix(lf.v)].is_zero()) {
        s1 = Series(tr, RatFunc(pt[ix(lf.p)] / pt[ix(lf.v)])) + sigma;
    } else {
        s0 = sigma;
    }
    // Homogeneous curve near p, then affine in the frame's chart.
    std::vector<Series> h;
    for (const auto& c : curve) {
        const Poly poly = c.to_poly().with_vars({"s"});
        const Series a = to_series(poly.coefficient_of("s", 1), tr);
        const Series b = to_series(poly.coefficient_of("s", 0), tr);
        h.push_back(a * s1 + b * s0);
    }
    const Series inv = h[ix(fr.v)].inverse();
    std::map<std::string, Series> bind;
    for (int i = 0; i <= spec.n; ++i) {
        bind[name_of(spec, i)] = h[ix(i)] * inv;
    }
    auto at = [&](const Poly& p) { return poly_substitute(p, bind, tr); };
    const Series& loc_u = bind[name_of(spec, fr.u)];
    const Series& loc_cross = bind[name_of(spec, fr.cross)];
    const Series e = at(fr.E);
    const Series f3 = at(fr.f3);
    const Series g = loc_cross * e + tt * f3;
    const RatFunc c = g.coefficient(1, 0);
    if (c.is_zero()) {
        throw std::logic_error("line is tangent to an edge at " + point_str(pt));
    }
    const RatFunc c_inv = c.inverse();
    Series root(tr);
    for (int r = 0; r <= k; ++r) {
        root -= g.compose_s(root) * c_inv;
    }
    const Series z = (loc_u - Series(tr, RatFunc(fr.alpha))) * at(fr.f1) -
                     tt * at(fr.f2) * f3 * e.inverse();
    const Series on_root = z.compose_s(root);
    for (int j = 0; j < k; ++j) {
        if (!on_root.coefficient(0, j).is_zero()) {
            throw std::logic_error("local model residual does not vanish at order " +
                                   std::to_string(j));
        }
    }
    return -on_root.coefficient(0, k) / fr.unit_check;
}

}  // namespace

KuranishiValue kuranishi_first_order(const FamilySpec& spec, const Line& line, Decomposition order,
                                     const std::string& chart)
{
    spec.validate();
    const int chart_index = chart.empty() ? -1 : spec.coordinate_index(chart);
    if (!chart.empty() && chart_index < 0) {
        throw UnknownVariable("chart coordinate '" + chart + "'");
    }
    const auto points = line_singular_points(spec, line);
    auto residues = parallel_map(points, [&](const SingularPoint& p) {
        const bool usable = chart_index >= 0 && !p.point[ix(chart_index)].is_zero() &&
                            std::find(p.host.factors.begin(), p.host.factors.end(),
                                      spec.factor_of_coordinate(chart_index)) == p.host.factors.end();
        return first_order_residue(local_frame(spec, line, p, order, usable ? chart : ""));
    });
    return assemble(1, std::move(residues));
}

KuranishiValue kuranishi_series(const FamilySpec& spec, const Line& line, int k)
{
    if (k < 1) {
        throw InvalidArgument("Kuranishi order must be at least 1");
    }
    if (k >= 2 && spec.is_symbolic()) {
        throw InvalidArgument("order " + std::to_string(k) +
                              " needs all parameters specialized to rationals");
    }
    spec.validate();
    const auto points = line_singular_points(spec, line);
    const LiftResult lift = lift_solve(spec, line, k);
    if (lift.status == LiftStatus::Obstructed) {
        throw ObstructedAtLowerOrder(lift.order - 1);
    }
    const auto curve = lift_ansatz(spec, lift, k - 1, k - 1);
    auto residues = parallel_map(points, [&](const SingularPoint& p) {
        ResidueDatum rd;
        rd.frame = local_frame(spec, line, p);
        rd.order = k;
        rd.b = series_residue(spec, lift, curve, rd.frame, k);
        return rd;
    });
    return assemble(k, std::move(residues));
}

KuranishiValue kuranishi_higher(const FamilySpec& spec, const Line& line, int k)
{
    if (k < 2) {
        throw InvalidArgument("higher Kuranishi order must be at least 2");
    }
    if (spec.is_symbolic()) {
        throw InvalidArgument("order " + std::to_string(k) +
                              " needs all parameters specialized to rationals");
    }
    if (!kuranishi_first_order(spec, line).value.is_zero()) {
        throw ObstructedAtLowerOrder(1);
    }
    for (int j = 2; j < k; ++j) {
        if (!kuranishi_series(spec, line, j).value.is_zero()) {
            throw ObstructedAtLowerOrder(j);
        }
    }
    return kuranishi_series(spec, line, k);
}

namespace {

const std::vector<std::string>& model_coordinates()
{
    static const std::vector<std::string> names{"x", "y", "z", "w", "t"};
    return names;
}

}  // namespace

VectorField parse_vector_field(const std::string& text)
{
    const Poly p = Poly::parse(text);
    std::vector<std::string> dvars;
    for (const auto& c : model_coordinates()) {
        dvars.push_back("d" + c);
    }
    for (const auto& [ex, c] : p.terms()) {
        int deg = 0;
        for (std::size_t i = 0; i < p.vars().size(); ++i) {
            if (std::find(dvars.begin(), dvars.end(), p.vars()[i]) != dvars.end()) {
                deg += ex[i];
            }
        }
        if (deg != 1) {
            throw ParseError(1, 1, "vector field must be linear in dx, dy, dz, dw, dt");
        }
    }
    VectorField v;
    for (const auto& c : model_coordinates()) {
        const Poly coef = p.with_vars({"d" + c}).coefficient_of("d" + c, 1);
        if (!coef.is_zero()) {
            v[c] = coef;
        }
    }
    return v;
}

LogTangentResult log_tangent_check(const VectorField& v)
{
    for (const auto& [k, c] : v) {
        const auto& names = model_coordinates();
        if (std::find(names.begin(), names.end(), k) == names.end()) {
            throw InvalidArgument("vector field component '" + k + "' is not a model coordinate");
        }
    }
    auto comp = [&](const std::string& c) {
        const auto it = v.find(c);
        return it == v.end() ? Poly() : it->second;
    };
    LogTangentResult res;
    for (const char* c : {"z", "t"}) {
        if (!divides(Poly::var(c), comp(c))) {
            return res;
        }
    }
    res.logarithmic = true;
    const std::map<std::string, RatFunc> curve{
        {"x", RatFunc(Poly::var("a") * Poly::var("w"))},
        {"y", RatFunc(Poly::var("b") * Poly::var("w"))},
        {"z", RatFunc(0)},
        {"t", RatFunc(0)}};
    for (const auto& c : model_coordinates()) {
        res.log_coefficients.push_back(RatFunc(comp(c), Poly::var(c)).subs(curve));
    }
    // Generators on the basis x dx, y dy, z dz, w dw, t dt.
    const std::vector<std::vector<int>> gens{
        {1, -1, 0, 0, 0}, {0, 1, -1, 0, 0}, {0, 0, 0, 1, -1}, {0, 0, 1, 1, 0}};
    Matrix<RatFunc> a(5, std::vector<RatFunc>(gens.size()));
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t r = 0; r < 5; ++r) {
            a[r][g] = RatFunc(gens[g][r]);
        }
    }
    const auto sol = solve(a, res.log_coefficients);
    if (sol) {
        res.member = true;
        res.combination = *sol;
    }
    return res;
}

bool log_tangent_membership(const VectorField& v) { return log_tangent_check(v).member; }

}  // namespace degenlift
