#include "degenlift/fixtures.hpp"

#include "degenlift/errors.hpp"

namespace degenlift {

FamilySpec build_fixture(const FixtureRecipe& recipe)
{
    FamilySpec spec;
    spec.n = recipe.n;
    spec.degree = recipe.degree;
    spec.coordinates = recipe.coordinates;
    spec.params = recipe.params;
    spec.chart = recipe.chart;
    for (const auto& c : recipe.factor_coordinates) {
        spec.factors.push_back(Poly::var(c));
    }
    const int d = recipe.degree;
    Poly f;
    for (const auto& [c, value] : recipe.corners) {
        if (spec.coordinate_index(c) < 0) {
            throw InvalidFamily("corner for unknown coordinate '" + c + "'");
        }
        f += Poly::monomial(value, {{c, d}});
    }
    for (const auto& [uv, roots] : recipe.edge_roots) {
        const auto& [u, v] = uv;
        const auto cu = recipe.corners.find(u);
        const auto cv = recipe.corners.find(v);
        if (cu == recipe.corners.end() || cv == recipe.corners.end() || cu->second.is_zero() ||
            cv->second.is_zero()) {
            throw InvalidFamily("edge (" + u + ", " + v + ") needs nonzero corner coefficients");
        }
        std::vector<Rat> rs = roots;
        Rat prod(1);
        for (const auto& r : rs) {
            prod *= r;
        }
        // C_u * prod(-r_i) = C_v.
        const Rat target = ((d % 2 == 0) ? Rat(1) : Rat(-1)) * cv->second / cu->second;
        if (static_cast<int>(rs.size()) == d - 1) {
            if (prod.is_zero()) {
                throw InvalidFamily("prescribed roots must be nonzero");
            }
            rs.push_back(target / prod);
        } else if (static_cast<int>(rs.size()) != d || prod != target) {
            throw InvalidFamily("edge (" + u + ", " + v + ") roots are inconsistent with corners");
        }
        Poly edge = Poly(cu->second);
        for (const auto& r : rs) {
            edge *= Poly::var(u) - Poly(r) * Poly::var(v);
        }
        // Keep only the mixed monomials; the corners are already in f.
        for (const auto& [ex, c] : edge.terms()) {
            std::map<std::string, int> mono;
            int nonzero = 0;
            for (std::size_t i = 0; i < edge.vars().size(); ++i) {
                mono[edge.vars()[i]] = ex[i];
                nonzero += ex[i] > 0 ? 1 : 0;
            }
            if (nonzero == 2) {
                f += Poly::monomial(c, mono);
            }
        }
    }
    spec.f = f + recipe.extra;
    spec.validate();
    for (const auto& e : all_edges(spec)) {
        std::map<std::string, Rat> zero;
        for (int k : e.factors) {
            zero[spec.coordinates[static_cast<std::size_t>(
                spec.factor_coordinate(static_cast<std::size_t>(k)))]] = Rat(0);
        }
        if (!recipe.extra.eval(zero).is_zero()) {
            throw InvalidFamily("extra terms do not vanish on " + e.str(spec));
        }
    }
    return spec;
}

FamilySpec quartic_k3_example()
{
    FamilySpec spec;
    spec.n = 3;
    spec.degree = 4;
    spec.coordinates = {"x", "y", "z", "w"};
    for (const auto& c : spec.coordinates) {
        spec.factors.push_back(Poly::var(c));
    }
    spec.f = Poly::parse(
        "x^4 - z^4 - 2*z*w^3 - w^4 + a*x^2*w^2 + b*x*z*w^2 - a*x*w^3 + y*w^3 + y^4");
    spec.params = {"a", "b"};
    spec.chart = "w";
    spec.validate();
    return spec;
}

FamilySpec cubic_rational_fixture()
{
    FixtureRecipe r;
    r.n = 3;
    r.degree = 3;
    r.coordinates = {"x", "y", "z", "w"};
    r.factor_coordinates = {"x", "y", "z"};
    r.corners = {{"x", Rat(1)}, {"y", Rat(2)}, {"z", Rat(-1)}, {"w", Rat(6)}};
    // Edges {y=z=0}, {x=z=0}, {x=y=0} have free coordinates (x,w), (y,w), (z,w).
    r.edge_roots[{"x", "w"}] = {Rat(1), Rat(-2)};
    r.edge_roots[{"y", "w"}] = {Rat(1), Rat(3)};
    r.edge_roots[{"z", "w"}] = {Rat(2), Rat(-1)};
    r.extra = Poly::parse("x*y*w + 2*x*z*w - y*z*w + x*y*z + x^2*y - y^2*z + 3*z^2*x");
    r.chart = "w";
    return build_fixture(r);
}

std::vector<Rat> edge_point(std::size_t dim, int u, int v, const Rat& r)
{
    std::vector<Rat> p(dim, Rat(0));
    p[static_cast<std::size_t>(u)] = r;
    p[static_cast<std::size_t>(v)] = Rat(1);
    return normalize_point(p);
}

}  // namespace degenlift
