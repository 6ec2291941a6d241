#include <doctest.h>

#include <random>

#include "degenlift/errors.hpp"
#include "degenlift/family.hpp"
#include "degenlift/fixtures.hpp"
#include "k3_fixtures.hpp"

using namespace degenlift;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

FamilySpec quartic_with(const char* f)
{
    FamilySpec s;
    s.n = 3;
    s.degree = 4;
    s.coordinates = {"x", "y", "z", "w"};
    for (const auto& c : s.coordinates) {
        s.factors.push_back(Poly::var(c));
    }
    s.f = P(f);
    s.chart = "w";
    s.validate();
    return s;
}

FamilySpec quintic_spec()
{
    FamilySpec s;
    s.n = 4;
    s.degree = 5;
    s.coordinates = {"z0", "z1", "z2", "z3", "z4"};
    for (const auto& c : s.coordinates) {
        s.factors.push_back(Poly::var(c));
    }
    s.f = P("z0^5 + z1^5 + z2^5 + z3^5 + z4^5 + z0*z1*z2*z3*z4 + z1^2*z2^3 - z3*z4^4");
    s.validate();
    return s;
}

}  // namespace

TEST_CASE("total equation of the standard degenerations")
{
    const FamilySpec k3 = quartic_k3_example();
    CHECK(total_equation(k3) == P("x*y*z*w") + Poly::var("t") * k3.f);
    CHECK(total_equation(k3).eval({{"t", Rat(0)}}) == P("x*y*z*w"));

    const FamilySpec cubic = cubic_rational_fixture();
    CHECK(total_equation(cubic) == P("x*y*z") + Poly::var("t") * cubic.f);

    const FamilySpec q = quintic_spec();
    CHECK(total_equation(q).eval({{"t", Rat(0)}}) == P("z0*z1*z2*z3*z4"));
}

TEST_CASE("validation errors")
{
    FamilySpec s = quartic_k3_example();
    s.f = s.f + P("x^3");
    CHECK_THROWS_AS(s.validate(), NonHomogeneous);

    s = quartic_k3_example();
    s.factors.pop_back();
    CHECK_THROWS_AS(s.validate(), InvalidFamily);

    s = quartic_k3_example();
    s.f = s.f + P("c*x^4");
    CHECK_THROWS_AS(s.validate(), UnknownVariable);
}

TEST_CASE("strata kinds and dimensions")
{
    const FamilySpec s = quartic_k3_example();
    CHECK(component(s, 1).dimension(s) == 2);
    CHECK(component(s, 1).kind(s) == StratumKind::Component);
    const Stratum edge = make_stratum(s, {2, 1}, "w");
    CHECK(edge.factors == std::vector<int>{1, 2});
    CHECK(edge.dimension(s) == 1);
    CHECK(edge.kind(s) == StratumKind::Edge);
    CHECK(make_stratum(s, {0, 1, 2}).kind(s) == StratumKind::Point);
    CHECK(all_edges(s).size() == 6);
    CHECK(component_edges(s, component(s, 1)).size() == 3);
    CHECK_THROWS_AS(make_stratum(s, {1, 1}), InvalidStratum);
    CHECK_THROWS_AS(make_stratum(s, {1, 2}, "y"), InvalidStratum);

    const FamilySpec q = quintic_spec();
    CHECK(make_stratum(q, {0, 1}).kind(q) == StratumKind::Divisor);
    CHECK(make_stratum(q, {0, 1, 2}).kind(q) == StratumKind::Edge);
}

TEST_CASE("restriction to strata")
{
    const FamilySpec s = quartic_k3_example();
    CHECK(restrict_to_stratum(s, make_stratum(s, {1, 2}, "w")) == P("x^4 + a*x^2 - a*x - 1"));

    const FamilySpec quart = quartic_with("x^4 + y^4 + z^4 + w^4");
    CHECK(quartic_with("x^4").f.is_zero() == false);
    CHECK(restrict_to_stratum(quartic_with("x^4"), make_stratum(quart, {0, 1})).is_zero());
    CHECK_THROWS(restrict_to_stratum(s, make_stratum(s, {0, 1, 2})));

    const FamilySpec q = quintic_spec();
    const Poly c = restrict_to_stratum(q, make_stratum(q, {0, 1}));
    CHECK(c.used_vars() == std::vector<std::string>{"z2", "z3", "z4"});
    CHECK(c.is_homogeneous_in({"z2", "z3", "z4"}, 5));
}

TEST_CASE("singular points of the worked example")
{
    const FamilySpec s = quartic_k3_example();
    const EdgeLocus yz = singular_points_on_edge(s, make_stratum(s, {1, 2}, "w"));
    REQUIRE(yz.points.size() == 1);
    CHECK(yz.points[0].point == std::vector<Rat>{1, 0, 0, 1});
    CHECK(yz.unresolved == 3);

    const EdgeLocus xy = singular_points_on_edge(s, make_stratum(s, {0, 1}, "w"));
    bool found = false;
    for (const auto& p : xy.points) {
        found = found || p.point == std::vector<Rat>{0, 0, -1, 1};
    }
    CHECK(found);

    // The third point of the line sits at infinity in the w-chart.
    const EdgeLocus yw = singular_points_on_edge(s, make_stratum(s, {1, 3}));
    found = false;
    for (const auto& p : yw.points) {
        found = found || p.point == std::vector<Rat>{1, 0, 1, 0};
    }
    CHECK(found);
    for (const auto& p : yz.points) {
        CHECK(is_ordinary_singularity(s, p));
    }
}

TEST_CASE("edges without rational roots")
{
    const FamilySpec s = quartic_with("x^4 + x*w^3 + w^4 + y^4 + z^4");
    const EdgeLocus loc = singular_points_on_edge(s, make_stratum(s, {1, 2}));
    CHECK(loc.points.empty());
    CHECK(loc.unresolved == 4);
}

TEST_CASE("double roots and fixed points are not ordinary")
{
    // Edge {y=z=0} restricts to (x-1)^2 (x^2+1).
    const FamilySpec dbl = quartic_with("x^4 - 2*x^3*w + 2*x^2*w^2 - 2*x*w^3 + w^4 + y^4 + z^4");
    const Stratum edge = make_stratum(dbl, {1, 2}, "w");
    CHECK_THROWS_AS(singular_points_on_edge(dbl, edge), DegenerateSingularity);
    SingularPoint p{edge, Rat(1), {1, 0, 0, 1}};
    CHECK_FALSE(is_ordinary_singularity(dbl, p));

    // Edge {y=z=0} restricts to x (x-1)(x-2)(x-3): a root at the fixed point (0,0,0,1).
    const FamilySpec fixed = quartic_with("x^4 - 6*x^3*w + 11*x^2*w^2 - 6*x*w^3 + y^4 + z^4");
    const EdgeLocus loc = singular_points_on_edge(fixed, make_stratum(fixed, {1, 2}, "w"));
    CHECK(loc.points.size() == 3);
    CHECK(loc.fixed_point_roots == 1);
    SingularPoint origin{make_stratum(fixed, {1, 2}, "w"), Rat(0), {0, 0, 0, 1}};
    CHECK_FALSE(is_ordinary_singularity(fixed, origin));
    for (const auto& q : loc.points) {
        CHECK(is_ordinary_singularity(fixed, q));
    }
}

TEST_CASE("singular points solve the total equation and its t-derivative")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        const FamilySpec s = testgen::random_k3_line_fixture(rng, trial % 2 == 0).spec;
        const Poly total = total_equation(s);
        const Poly dt = total.partial("t");
        for (const auto& e : all_edges(s)) {
            const EdgeLocus loc = singular_points_on_edge(s, e);
            int count = loc.unresolved + loc.fixed_point_roots;
            for (const auto& p : loc.points) {
                std::map<std::string, Rat> at{{"t", Rat(0)}};
                for (std::size_t i = 0; i < p.point.size(); ++i) {
                    at[s.coordinates[i]] = p.point[i];
                }
                CHECK(total.eval(at).is_zero());
                CHECK(dt.eval(at).is_zero());
                ++count;
            }
            CHECK(count == s.degree);
        }
    }
}

TEST_CASE("prescribed fixture roots are recovered")
{
    const FamilySpec s = cubic_rational_fixture();
    const EdgeLocus loc = singular_points_on_edge(s, make_stratum(s, {0, 1}, "w"));
    std::vector<Rat> coords;
    for (const auto& p : loc.points) {
        coords.push_back(p.coordinate);
    }
    CHECK(std::find(coords.begin(), coords.end(), Rat(2)) != coords.end());
    CHECK(std::find(coords.begin(), coords.end(), Rat(-1)) != coords.end());
    CHECK(loc.points.size() == 3);
}

TEST_CASE("specialization replaces parameters")
{
    const FamilySpec s = quartic_k3_example().specialized({{"a", Rat(0)}, {"b", Rat(2, 3)}});
    CHECK_FALSE(s.is_symbolic());
    CHECK(s.f == quartic_k3_example().f.eval({{"a", Rat(0)}, {"b", Rat(2, 3)}}));
}

TEST_CASE("rational roots with multiplicity")
{
    const auto roots = rational_roots(P("(x-1)^2*(2*x+3)*(x^2+1)"), "x");
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair<Rat, int>{Rat(-3, 2), 1});
    CHECK(roots[1] == std::pair<Rat, int>{Rat(1), 2});
}
