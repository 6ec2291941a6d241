#include "degenlift/lifter.hpp"

#include <algorithm>
#include <stdexcept>

#include "degenlift/errors.hpp"

namespace degenlift {

namespace {

std::string unknown_symbol(const std::string& name) { return "lift_" + name; }

std::string coeff_name(char letter, int order) { return std::string(1, letter) + std::to_string(order); }

// Value of a coefficient if already solved, otherwise its symbol.
RatFunc value_or_symbol(const std::map<std::string, RatFunc>& known, const std::string& name)
{
    const auto it = known.find(name);
    if (it != known.end()) {
        return it->second;
    }
    return RatFunc(Poly::var(unknown_symbol(name)));
}

// Affine ansatz coordinates with unknowns that are not in `known` kept as
// symbols.
std::vector<RatFunc> ansatz(const FamilySpec& spec, const LiftFrame& fr,
                            const std::map<std::string, RatFunc>& known, int plane_order,
                            int normal_order, bool reparam)
{
    const RatFunc s(Poly::var("s"));
    const RatFunc t(Poly::var("t"));
    std::vector<RatFunc> x(spec.coordinates.size(), RatFunc(0));
    x[static_cast<std::size_t>(fr.v)] = RatFunc(1);
    RatFunc p = s;
    if (reparam && plane_order >= 1) {
        p += t * value_or_symbol(known, "e1");
    }
    x[static_cast<std::size_t>(fr.p)] = p;
    RatFunc q = RatFunc(fr.q0) + RatFunc(fr.q1) * s;
    RatFunc tj(1);
    for (int j = 1; j <= plane_order; ++j) {
        tj *= t;
        q += tj * (value_or_symbol(known, coeff_name('a', j)) * s +
                   value_or_symbol(known, coeff_name('b', j)));
    }
    x[static_cast<std::size_t>(fr.q)] = q;
    RatFunc nrm(0);
    tj = RatFunc(1);
    for (int j = 1; j <= normal_order; ++j) {
        tj *= t;
        nrm += tj * (value_or_symbol(known, coeff_name('c', j)) * s +
                     value_or_symbol(known, coeff_name('d', j)));
    }
    x[static_cast<std::size_t>(fr.normal)] = nrm;
    return x;
}

Series expand(const FamilySpec& spec, const std::vector<RatFunc>& coords, int order)
{
    const Truncation tr = Truncation::in_t(order);
    std::map<std::string, Series> bind;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        bind.emplace(spec.coordinates[i], to_series(coords[i], tr));
    }
    return poly_substitute(total_equation(spec), bind, tr);
}

}  // namespace

LiftFrame lift_frame(const FamilySpec& spec, const Line& line, const std::string& chart)
{
    if (spec.n != 3) {
        throw AnsatzInapplicable("the lifting ansatz needs a plane component (n = 3)");
    }
    LiftFrame fr;
    fr.component = line_component(spec, line);
    fr.normal = spec.factor_coordinate(static_cast<std::size_t>(fr.component));
    if (!torically_transverse(spec, line)) {
        throw AnsatzInapplicable("line " + line.str(spec.coordinates) +
                                 " passes through a torus fixed point");
    }
    std::vector<int> plane;
    for (int i = 0; i <= spec.n; ++i) {
        if (i != fr.normal) {
            plane.push_back(i);
        }
    }
    auto in_plane = [&](int c) { return std::find(plane.begin(), plane.end(), c) != plane.end(); };
    if (!chart.empty()) {
        fr.v = spec.coordinate_index(chart);
        if (fr.v < 0 || !in_plane(fr.v)) {
            throw AnsatzInapplicable("chart '" + chart + "' is not a coordinate of the line's plane");
        }
    } else {
        const int def = spec.coordinate_index(spec.chart_coordinate());
        fr.v = in_plane(def) ? def : plane.back();
    }
    for (int c : plane) {
        if (c == fr.v) {
            continue;
        }
        if (fr.p < 0) {
            fr.p = c;
        } else {
            fr.q = c;
        }
    }
    const auto at_p0 = line.meet_coordinate(fr.p);
    const auto at_v0 = line.meet_coordinate(fr.v);
    const auto idx = [](int c) { return static_cast<std::size_t>(c); };
    fr.q0 = at_p0[idx(fr.q)] / at_p0[idx(fr.v)];
    fr.q1 = at_v0[idx(fr.q)] / at_v0[idx(fr.p)];
    return fr;
}

LiftResult lift_solve(const FamilySpec& spec, const Line& line, int order,
                      const LiftOptions& options)
{
    if (order < 1) {
        throw InvalidArgument("lift order must be at least 1");
    }
    spec.validate();
    LiftResult res;
    res.frame = lift_frame(spec, line, options.chart);
    const auto& fr = res.frame;
    {
        // The central-fiber line must lie on X_0 and the equation must vanish
        // at t = 0 identically.
        const Series base = expand(spec, ansatz(spec, fr, {}, 0, 0, false), 0);
        if (!base.is_zero()) {
            throw InvalidLine("line does not lie in the central fiber");
        }
    }
    for (int m = 1; m <= order; ++m) {
        OrderStep step;
        step.order = m;
        step.unknowns = {coeff_name('c', m), coeff_name('d', m)};
        if (m >= 2) {
            step.unknowns.push_back(coeff_name('a', m - 1));
            step.unknowns.push_back(coeff_name('b', m - 1));
        }
        const bool reparam = options.reparametrization_unknown && m >= 2;
        if (reparam && m == 2) {
            step.unknowns.push_back("e1");
        }
        const Series ex = expand(
            spec, ansatz(spec, fr, res.coefficients, m - 1, m, options.reparametrization_unknown),
            m);
        for (int j = 0; j < m; ++j) {
            if (!ex.coefficient(0, j).is_zero()) {
                throw std::logic_error("lift: order " + std::to_string(j) +
                                       " residual did not vanish");
            }
        }
        const Poly num = ex.coefficient(0, m).num();
        if (num.degree("s") > spec.degree + 1) {
            throw std::logic_error("lift: residual s-degree exceeds d + 1");
        }
        std::vector<std::string> syms;
        for (const auto& u : step.unknowns) {
            syms.push_back(unknown_symbol(u));
        }
        std::map<std::string, Rat> zero;
        for (const auto& s : syms) {
            zero[s] = Rat(0);
        }
        const auto rows = num.with_vars({"s"}).coefficients_in("s");
        for (const auto& c : rows) {
            std::vector<Poly> row;
            Poly rebuilt = c.eval(zero);
            for (const auto& sym : syms) {
                const Poly coef = c.with_vars({sym}).coefficient_of(sym, 1).eval(zero);
                row.push_back(coef);
                rebuilt += coef * Poly::var(sym);
            }
            if (rebuilt != c) {
                throw std::logic_error("lift: order " + std::to_string(m) +
                                       " system is not linear in its unknowns");
            }
            step.matrix.push_back(row);
            step.rhs.push_back(-c.eval(zero));
        }
        if (step.matrix.empty()) {
            step.matrix.push_back(std::vector<Poly>(syms.size()));
            step.rhs.push_back(Poly());
        }
        const auto elim = eliminate_fraction_free(step.matrix, step.rhs);
        step.conditions = elim.conditions;
        step.unique = elim.unique;
        for (std::size_t i = 0; i < step.unknowns.size(); ++i) {
            step.values[step.unknowns[i]] = elim.solution[i];
            res.coefficients[step.unknowns[i]] = elim.solution[i];
        }
        res.steps.push_back(step);
        if (!step.conditions.empty()) {
            res.status = LiftStatus::Obstructed;
            res.order = m;
            res.obstruction_ideal = step.conditions;
            return res;
        }
    }
    res.status = LiftStatus::Solved;
    res.order = order;
    return res;
}

std::vector<Poly> obstruction_ideal(const FamilySpec& spec, const Line& line, int order,
                                    const LiftOptions& options)
{
    return lift_solve(spec, line, order, options).obstruction_ideal;
}

std::vector<RatFunc> lift_ansatz(const FamilySpec& spec, const LiftResult& result, int plane_order,
                                 int normal_order)
{
    std::map<std::string, RatFunc> known = result.coefficients;
    // Unsolved coefficients (beyond the computed orders) are taken as zero.
    for (int j = 1; j <= std::max(plane_order, normal_order); ++j) {
        for (char c : {'a', 'b', 'c', 'd'}) {
            known.emplace(coeff_name(c, j), RatFunc(0));
        }
    }
    known.emplace("e1", RatFunc(0));
    const bool reparam = result.coefficients.count("e1") > 0;
    return ansatz(spec, result.frame, known, plane_order, normal_order, reparam);
}

Series lift_residual(const FamilySpec& spec, const LiftResult& result)
{
    const int n = result.order;
    const int plane = result.status == LiftStatus::Solved ? n - 1 : n - 2;
    const int normal = result.status == LiftStatus::Solved ? n : n - 1;
    return expand(spec, lift_ansatz(spec, result, std::max(plane, 0), std::max(normal, 0)), n);
}

bool model_case_check(const Poly& zeta, int order)
{
    for (const auto& v : zeta.used_vars()) {
        if (v != "s") {
            throw InvalidArgument("zeta must be a polynomial in s alone");
        }
    }
    if (order < 1) {
        throw InvalidArgument("model_case_check needs order >= 1");
    }
    const int D = std::max(zeta.degree("s"), 0);
    const Poly s = Poly::var("s");
    auto coeff_poly = [&](const std::string& stem, int k, int deg, std::vector<std::string>& names) {
        Poly acc;
        for (int i = 0; i <= deg; ++i) {
            const std::string name = "lift_" + stem + std::to_string(k) + "_" + std::to_string(i);
            names.push_back(name);
            acc += Poly::var(name) * s.pow(i);
        }
        return acc;
    };
    // X = s, Y = sum t^k h_k(s), Z = s zeta(s) + sum t^k g_k(s).
    const int top = order + 1;  // the equation at t^(k+1) pins down g_k
    for (int k = 1; k <= top; ++k) {
        std::vector<std::string> names;
        const Poly hk = coeff_poly("h", k, D, names);
        const std::size_t h_count = names.size();
        Poly gprev;
        if (k == 1) {
            gprev = s * zeta;
        } else {
            gprev = coeff_poly("g", k - 1, D + 1, names);
        }
        // Coefficient of t^k in XY + tZ.
        const Poly eq = s * hk + gprev;
        Matrix<Rat> a;
        std::vector<Rat> b;
        std::map<std::string, Rat> zero;
        for (const auto& n : names) {
            zero[n] = Rat(0);
        }
        for (const auto& row : eq.with_vars({"s"}).coefficients_in("s")) {
            std::vector<Rat> r;
            for (const auto& n : names) {
                r.push_back(row.with_vars({n}).coefficient_of(n, 1).eval(zero).constant_term());
            }
            a.push_back(r);
            b.push_back(-row.eval(zero).constant_term());
        }
        const auto sol = solve(a, b);
        if (!sol) {
            return false;
        }
        if (k >= 2) {
            // Every solution must have g_{k-1}(0) = 0.
            const std::size_t g0 = h_count;
            if (!(*sol)[g0].is_zero()) {
                return false;
            }
            for (const auto& kv : nullspace(a, names.size())) {
                if (!kv[g0].is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace degenlift
