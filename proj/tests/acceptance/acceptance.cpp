// End-to-end acceptance checks, one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "degenlift/census.hpp"
#include "degenlift/commands.hpp"
#include "degenlift/errors.hpp"
#include "degenlift/familyfile.hpp"
#include "degenlift/kuranishi.hpp"
#include "degenlift/lifter.hpp"
#include "degenlift/lines.hpp"
#include "degenlift/series.hpp"
#include "degenlift/sheaf.hpp"
#include "../unit/k3_fixtures.hpp"
#include "../unit/random_gen.hpp"

using namespace degenlift;

namespace {

const std::string kFixtures = std::string(DEGENLIFT_SOURCE_DIR) + "/fixtures/";

// Collects failed expectations of one criterion.
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

Line example_line()
{
    return line_through({Rat(1), Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(-1), Rat(1)});
}

const Poly& example_condition()
{
    static const Poly p = Poly::parse("a^2 + a*b + 4*a + 6*b - 4");
    return p;
}

void kuranishi_regression(Check& c)
{
    const FamilySpec s = load_family(kFixtures + "quartic_k3_example.fam");
    CommandOptions o;
    o.order = 1;
    const CommandOutcome out = run_command("kuranishi", s, o);
    const std::string cond = out.report.get("line.1", "vanishing_condition");
    c.expect(!cond.empty(), "no line reported");
    if (!cond.empty()) {
        c.expect(Poly::parse(cond).primitive() == example_condition(),
                 "vanishing condition " + cond);
    }
    c.expect(kuranishi_first_order(s, example_line()).vanishing_condition == example_condition(),
             "library value differs");
}

void oracle_equivalence(Check& c)
{
    const FamilySpec s = load_family(kFixtures + "quartic_k3_example.fam");
    const LiftResult r = lift_solve(s, example_line(), 2);
    c.expect(r.obstruction_ideal == std::vector<Poly>{example_condition()}, "obstruction ideal");
    c.expect(r.coefficients.at("c1") == RatFunc(Rat(-4)), "c1");
    c.expect(r.coefficients.at("d1") == RatFunc::parse("2 - a - b"), "d1");
    c.expect(r.coefficients.at("a1").is_zero(), "a1");

    std::mt19937_64 rng(1);
    int samples = 0;
    int disagreements = 0;
    for (int i = 0; samples < 24; ++i) {
        const Rat a = testgen::small_rat(rng, 7);
        if (a == Rat(-6)) {
            continue;
        }
        const Rat b = i % 2 == 0 ? (Rat(4) - Rat(4) * a - a * a) / (a + Rat(6))
                                 : testgen::small_rat(rng, 7);
        const FamilySpec sp = s.specialized({{"a", a}, {"b", b}});
        bool zero = false;
        try {
            zero = kuranishi_first_order(sp, example_line()).value.is_zero();
        } catch (const NotOrdinary&) {
            continue;
        }
        const bool lifts = lift_solve(sp, example_line(), 2).status == LiftStatus::Solved;
        disagreements += zero == lifts ? 0 : 1;
        ++samples;
    }
    c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
}

void residue_values(Check& c)
{
    const FamilySpec s = load_family(kFixtures + "quartic_k3_example.fam");
    const std::vector<std::pair<std::vector<Rat>, RatFunc>> expected{
        {{1, 0, 0, 1}, RatFunc::parse("(a+b+2)/(4+a)")},
        {{0, 0, -1, 1}, RatFunc::parse("(a+b-2)/2")},
        {{1, 0, 1, 0}, RatFunc()},
    };
    const auto pts = line_singular_points(s, example_line());
    c.expect(pts.size() == 3, "three singular points");
    for (const auto& [point, b] : expected) {
        bool found = false;
        for (const auto& p : pts) {
            if (p.point == point) {
                found = true;
                const RatFunc got = first_order_residue(local_frame(s, example_line(), p)).b;
                c.expect(got == b, "b at " + point_str(point) + " = " + got.str());
            }
        }
        c.expect(found, "missing point " + point_str(point));
    }
}

void cubic_surface(Check& c)
{
    const FamilySpec s = load_family(kFixtures + "cubic_rational.fam");
    std::size_t total = 0;
    for (int k = 0; k < 3; ++k) {
        const auto lines = prelog_lines_cubic(s, component(s, k));
        c.expect(lines.size() == 9, "component " + std::to_string(k) + " has " +
                                        std::to_string(lines.size()) + " lines");
        total += lines.size();
        for (const auto& l : lines) {
            int hits = 0;
            for (const auto& h : incidence_profile(s, l).hits) {
                hits += h.flag == HitFlag::InS ? 1 : 0;
            }
            const int deg = log_normal_degree(1, hits);
            c.expect(deg == -1, "log normal degree");
            c.expect(cohomology_P1(deg) == Cohomology{0, 0}, "cohomology");
            const LiftResult r = lift_solve(s, l, 3);
            c.expect(r.status == LiftStatus::Solved && r.obstruction_ideal.empty(),
                     "lift of " + l.str(s.coordinates));
        }
    }
    c.expect(total == 27, "total " + std::to_string(total));
}

void quintic_census_check(Check& c)
{
    const CensusReport r = quintic_census();
    c.expect(r.get("incidence_total") == 1250, "incidence_total");
    c.expect(r.get("class2_raw") == 750, "class2_raw");
    c.expect(r.get("class2I") == 75, "class2I");
    c.expect(r.get("class2") == 675, "class2");
    c.expect(r.get("class1") == 575, "class1");
    c.expect(r.get("total_3fold") == 2875, "total_3fold");
    c.expect(r.get("class1") + r.get("class2") == r.get("incidence_total"), "class sum");
    c.expect(r.get("total_3fold") == 5 * r.get("class1"), "five components");
}

void class2_kill(Check& c)
{
    c.expect(!log_tangent_membership(parse_vector_field("x*dx + y*dy + w*dw")),
             "x dx + y dy + w dw accepted");
    for (const char* g : {"x*dx - y*dy", "y*dy - z*dz", "w*dw - t*dt", "z*dz + w*dw"}) {
        c.expect(log_tangent_membership(parse_vector_field(g)), std::string("rejects ") + g);
    }
}

void sheaf_bookkeeping(Check& c)
{
    c.expect(log_normal_degree(1, 3) == -2 && cohomology_P1(-2) == Cohomology{0, 1}, "(1,3)");
    c.expect(log_normal_degree(1, 2) == -1 && cohomology_P1(-1) == Cohomology{0, 0}, "(1,2)");
    c.expect(nodal_cohomology(SheafProfile::nodal({{-1, 0}, {0, -1}})).h1 == 0, "nodal pair");
    const int dims[] = {0, 2, 4};
    for (int n = 3; n <= 5; ++n) {
        c.expect(disk_profile(n).family_dimension == dims[n - 3], "disk n=" + std::to_string(n));
    }
}

void property_suites(Check& c)
{
    std::mt19937_64 rng(8);
    int ring_cases = 0;
    for (int i = 0; i < 300; ++i) {
        const std::vector<std::string> vars{"a", "x", "y"};
        const Poly p = testgen::random_poly(rng, vars, 3, 4);
        const Poly q = testgen::random_poly(rng, vars, 3, 4);
        const Poly r = testgen::random_poly(rng, vars, 3, 4);
        c.expect((p * q) * r == p * (q * r), "associativity");
        c.expect(p * q == q * p, "commutativity");
        c.expect(p * (q + r) == p * q + p * r, "distributivity");
        ++ring_cases;
    }
    const auto tr = Truncation::in_st(4, 4);
    int series_cases = 0;
    while (series_cases < 200) {
        const Poly p = testgen::random_poly(rng, {"a", "s", "t"}, 3, 4) +
                       Poly(testgen::nonzero_rat(rng));
        const Series u = to_series(p, tr);
        if (u.coefficient(0, 0).is_zero()) {
            continue;
        }
        c.expect(u * u.inverse() == Series(tr, RatFunc(1)), "series inverse");
        ++series_cases;
    }
    c.expect(ring_cases + series_cases >= 500, "case count");

    for (int i = 0; i < 50; ++i) {
        Poly zeta = Poly(testgen::nonzero_rat(rng, 4));
        for (int k = 1; k <= 3; ++k) {
            zeta += Poly(testgen::small_rat(rng, 4)) * Poly::var("s").pow(k);
        }
        c.expect(model_case_check(zeta, 4), "model case " + zeta.str());
    }

    for (int i = 0; i < 10; ++i) {
        const auto fx = testgen::random_k3_line_fixture(rng, true);
        for (const auto& p : line_singular_points(fx.spec, fx.line)) {
            const RatFunc b = first_order_residue(local_frame(fx.spec, fx.line, p)).b;
            const RatFunc swapped =
                first_order_residue(local_frame(fx.spec, fx.line, p, Decomposition::NormalFirst)).b;
            c.expect(b == swapped, "decomposition independence");
        }
    }

    for (int k = -10; k <= 10; ++k) {
        const Cohomology h = cohomology_P1(k);
        c.expect(h.h0 - h.h1 == k + 1, "Riemann-Roch on P1");
    }
    for (int d1 = -3; d1 <= 3; ++d1) {
        for (int d2 = -3; d2 <= 3; ++d2) {
            const Cohomology h = nodal_cohomology(d1, d2);
            c.expect(h.h0 - h.h1 == d1 + d2 + 1, "Riemann-Roch on the nodal curve");
        }
    }
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Kuranishi regression on the shipped example", 5, kuranishi_regression},
        {2, "oracle equivalence with the lifter", 60, oracle_equivalence},
        {3, "residue values", 5, residue_values},
        {4, "cubic surface: 27 liftable lines", 120, cubic_surface},
        {5, "quintic census", 1, quintic_census_check},
        {6, "class-2 log tangent test", 1, class2_kill},
        {7, "sheaf bookkeeping", 1, sheaf_bookkeeping},
        {8, "property suites", 60, property_suites},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.budget_seconds) {
            c.failures.push_back("over budget of " + std::to_string(cr.budget_seconds) + " s");
        }
        const bool ok = c.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("criterion %d %s  %s (%.2f s)", cr.number, ok ? "PASS" : "FAIL", cr.name, secs);
        if (!ok) {
            std::printf(": %s", c.failures.front().c_str());
            if (c.failures.size() > 1) {
                std::printf(" (+%zu more)", c.failures.size() - 1);
            }
        }
        std::printf("\n");
    }
    return failed == 0 ? 0 : 1;
}
