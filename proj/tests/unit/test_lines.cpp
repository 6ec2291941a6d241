#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "degenlift/errors.hpp"
#include "degenlift/fixtures.hpp"
#include "degenlift/lines.hpp"
#include "degenlift/sheaf.hpp"
#include "k3_fixtures.hpp"

using namespace degenlift;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

Point pt(std::initializer_list<long> v)
{
    Point p;
    for (long c : v) {
        p.emplace_back(c);
    }
    return p;
}

std::set<std::string> equation_set(const Line& l, const std::vector<std::string>& coords)
{
    std::set<std::string> out;
    for (const auto& e : l.equation_polys(coords)) {
        out.insert(e.primitive().str());
    }
    return out;
}

// Brute force over the singular points of the three edges of {y = 0}: the
// points (r,0,0,1), (0,0,s,1), (q,0,1,0) are collinear iff r + s q = 0.
std::vector<std::array<Rat, 3>> collinear_triples(const FamilySpec& s)
{
    auto ratios = [&](std::vector<int> edge, int num, int den) {
        std::vector<Rat> out;
        for (const auto& p : singular_points_on_edge(s, make_stratum(s, edge)).points) {
            out.push_back(p.point[static_cast<std::size_t>(num)] /
                          p.point[static_cast<std::size_t>(den)]);
        }
        return out;
    };
    const auto rs = ratios({1, 2}, 0, 3);
    const auto ss = ratios({0, 1}, 2, 3);
    const auto qs = ratios({1, 3}, 0, 2);
    std::vector<std::array<Rat, 3>> out;
    for (const auto& r : rs) {
        for (const auto& sv : ss) {
            for (const auto& q : qs) {
                if ((r + sv * q).is_zero()) {
                    out.push_back({r, sv, q});
                }
            }
        }
    }
    return out;
}

// Every returned line meets the edges of its component inside the
// singular locus: f vanishes at each meeting point.
void check_meets_singular_locus(const FamilySpec& s, const std::vector<Line>& lines)
{
    for (const auto& l : lines) {
        const int comp = line_component(s, l);
        for (const auto& e : component_edges(s, component(s, comp))) {
            const int other = e.factors[0] == comp ? e.factors[1] : e.factors[0];
            const Point m = l.meet_coordinate(s.factor_coordinate(static_cast<std::size_t>(other)));
            std::map<std::string, Rat> at;
            for (std::size_t i = 0; i < m.size(); ++i) {
                at[s.coordinates[i]] = m[i];
            }
            CHECK(s.f.eval(at).is_zero());
        }
    }
}

}  // namespace

TEST_CASE("line through two points")
{
    const std::vector<std::string> xyzw{"x", "y", "z", "w"};
    const Line l = line_through(pt({1, 0, 0, 1}), pt({0, 0, -1, 1}));
    CHECK(equation_set(l, xyzw) ==
          std::set<std::string>{P("x - z - w").primitive().str(), "y"});
    CHECK(l.contains(pt({1, 0, 1, 0})));
    CHECK(collinear(pt({1, 0, 0, 1}), pt({0, 0, -1, 1}), pt({1, 0, 1, 0})));
    CHECK_FALSE(l.contains(pt({1, 0, 0, 0})));

    const Line edge = line_through(pt({1, 0, 0, 0}), pt({0, 1, 0, 0}));
    CHECK(equation_set(edge, xyzw) == std::set<std::string>{"z", "w"});

    CHECK_THROWS_AS(line_through(pt({1, 2, 0, 1}), pt({2, 4, 0, 2})), InvalidLine);
    // The same line from other points compares equal.
    CHECK(line_through(pt({1, 0, 1, 0}), pt({2, 0, 1, 1})) == l);
}

TEST_CASE("incidence profile of the worked example line")
{
    const FamilySpec s = quartic_k3_example();
    const Line l = line_through(pt({1, 0, 0, 1}), pt({0, 0, -1, 1}));
    CHECK(line_component(s, l) == 1);
    CHECK(torically_transverse(s, l));
    const IncidenceProfile prof = incidence_profile(s, l);
    CHECK(prof.hits.size() == 3);
    for (const auto& h : prof.hits) {
        CHECK(h.flag == HitFlag::InS);
    }
    CHECK(prof.has(LineClass::PrelogOk));

    const Line off = line_through(pt({2, 0, 0, 1}), pt({0, 0, -1, 1}));
    CHECK(incidence_profile(s, off).has(LineClass::PrelogFail));
    CHECK_FALSE(torically_transverse(s, line_through(pt({1, 0, 0, 0}), pt({0, 0, 1, 1}))));
}

TEST_CASE("worked example contains the pre-log line")
{
    const FamilySpec s = quartic_k3_example();
    CHECK_THROWS_AS(prelog_lines_K3(s, component(s, 1)), IncompleteLocus);
    const auto lines = prelog_lines_K3(s, component(s, 1), true);
    const Line l = line_through(pt({1, 0, 0, 1}), pt({0, 0, -1, 1}));
    CHECK(std::find(lines.begin(), lines.end(), l) != lines.end());
    check_meets_singular_locus(s, lines);
}

TEST_CASE("engineered fixture with two collinear triples")
{
    const FamilySpec s = testgen::k3_with_roots({Rat(1), Rat(2), Rat(-3)}, {Rat(-1), Rat(4), Rat(5)},
                                       {Rat(1), Rat(-1, 2), Rat(7, 2)});
    const auto triples = collinear_triples(s);
    const auto lines = prelog_lines_K3(s, component(s, 1));
    CHECK(triples.size() == 2);
    REQUIRE(lines.size() == triples.size());
    for (const auto& t : triples) {
        const Line expect = line_through({t[0], 0, 0, 1}, {0, 0, t[1], 1});
        CHECK(std::find(lines.begin(), lines.end(), expect) != lines.end());
        CHECK(expect.contains({t[2], 0, 1, 0}));
    }
    check_meets_singular_locus(s, lines);
}

TEST_CASE("fixture without collinear triples")
{
    const FamilySpec s = testgen::k3_with_roots({Rat(1), Rat(2), Rat(-3)}, {Rat(-1), Rat(4), Rat(5)},
                                       {Rat(4), Rat(-5, 3), Rat(7, 2)});
    CHECK(collinear_triples(s).empty());
    CHECK(prelog_lines_K3(s, component(s, 1)).empty());
}

TEST_CASE("brute force agrees with enumeration on random fixtures")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        const FamilySpec s = testgen::random_k3_line_fixture(rng, false).spec;
        const auto lines = prelog_lines_K3(s, component(s, 1));
        CHECK(lines.size() == collinear_triples(s).size());
        CHECK(lines.size() >= 1);
        check_meets_singular_locus(s, lines);
    }
}

TEST_CASE("K3 enumeration is invariant under permuting the edges")
{
    const FamilySpec s = testgen::k3_with_roots({Rat(1), Rat(2), Rat(-3)}, {Rat(-1), Rat(4), Rat(5)},
                                       {Rat(1), Rat(-1, 2), Rat(7, 2)});
    const FamilySpec ex = quartic_k3_example().specialized({{"a", Rat(1)}, {"b", Rat(2)}});
    for (const FamilySpec* spec : {&s, &ex}) {
        const auto base = prelog_lines_K3(*spec, component(*spec, 1), true);
        std::vector<int> order{0, 1, 2};
        do {
            auto perm = prelog_lines_K3(*spec, component(*spec, 1), true, order);
            std::sort(perm.begin(), perm.end());
            auto sorted = base;
            std::sort(sorted.begin(), sorted.end());
            CHECK(perm == sorted);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("cubic surface: nine lines per component")
{
    const FamilySpec s = cubic_rational_fixture();
    std::size_t total = 0;
    for (int k = 0; k < 3; ++k) {
        const auto lines = prelog_lines_cubic(s, component(s, k));
        CHECK(lines.size() == 9);
        total += lines.size();
        for (const auto& l : lines) {
            const IncidenceProfile prof = incidence_profile(s, l);
            int in_s = 0;
            for (const auto& h : prof.hits) {
                in_s += h.flag == HitFlag::InS ? 1 : 0;
            }
            CHECK(in_s == 2);
            const int deg = log_normal_degree(1, in_s);
            CHECK(deg == -1);
            CHECK(cohomology_P1(deg) == Cohomology{0, 0});
        }
        check_meets_singular_locus(s, lines);
    }
    CHECK(total == 27);
}

TEST_CASE("cubic fixture with a root at a fixed point loses lines")
{
    FamilySpec s = cubic_rational_fixture();
    // Edge {x=z=0} becomes 2 w (y - w)(y - 3w): its third root is the fixed
    // point (0,1,0,0). The w^3 coefficient (shared with the other edges) stays 6.
    s.f = s.f - s.f.eval({{"x", Rat(0)}, {"z", Rat(0)}}) + P("2*w*(y-w)*(y-3*w)");
    s.validate();
    const EdgeLocus loc = singular_points_on_edge(s, make_stratum(s, {0, 2}));
    CHECK(loc.points.size() == 2);
    CHECK(loc.fixed_point_roots == 1);
    std::vector<std::size_t> counts;
    for (int k = 0; k < 3; ++k) {
        counts.push_back(prelog_lines_cubic(s, component(s, k)).size());
    }
    CHECK(counts == std::vector<std::size_t>{6, 9, 6});
    for (auto c : counts) {
        CHECK(c <= 9);
    }
}

TEST_CASE("cubic component with irrational roots")
{
    FamilySpec s = cubic_rational_fixture();
    s.f = s.f - s.f.eval({{"x", Rat(0)}, {"z", Rat(0)}}) + P("(y^2 - 2*w^2)*(y - 3*w)");
    s.validate();
    CHECK_THROWS_AS(prelog_lines_cubic(s, component(s, 0)), IncompleteLocus);
    CHECK(prelog_lines_cubic(s, component(s, 0), true).size() == 3);
    CHECK(prelog_lines_cubic(s, component(s, 1)).size() == 9);
}

TEST_CASE("quintic line classes")
{
    FamilySpec q;
    q.n = 4;
    q.degree = 5;
    q.coordinates = {"z0", "z1", "z2", "z3", "z4"};
    for (const auto& c : q.coordinates) {
        q.factors.push_back(Poly::var(c));
    }
    q.f = P("z0^5 + z1^5 + z2^5 + z3^5 + z4^5");
    q.validate();

    const Line two = line_through(pt({0, 0, 0, 1, 1}), pt({0, 1, 1, 0, 0}));
    CHECK(classify_quintic_line(two, q).has(LineClass::Class2I));

    const Line one = line_through(pt({0, 0, 0, 1, 1}), pt({0, 1, 2, 3, 5}));
    CHECK(classify_quintic_line(one, q).has(LineClass::Class2II));

    const Line none = line_through(pt({0, 1, 1, 1, 1}), pt({0, 1, 2, 3, 4}));
    const IncidenceProfile prof = classify_quintic_line(none, q);
    CHECK(prof.has(LineClass::Class1));
    CHECK(prof.hits.size() == 4);
    for (const auto& h : prof.hits) {
        CHECK(h.deeper.empty());
    }
    CHECK_THROWS_AS(classify_quintic_line(none, quartic_k3_example()), InvalidFamily);
}
