#include "degenlift/census.hpp"

#include <vector>

#include "degenlift/errors.hpp"
#include "degenlift/lines.hpp"

namespace degenlift {

const char* to_string(CensusScenario s)
{
    switch (s) {
    case CensusScenario::Quintic:
        return "quintic";
    case CensusScenario::CubicToric:
        return "cubic_toric";
    case CensusScenario::CubicPlaneQuadric:
        return "cubic_plane_quadric";
    case CensusScenario::K3Prelog:
        return "k3_prelog";
    }
    return "?";
}

long long CensusReport::get(const std::string& name) const
{
    for (const auto& [k, v] : entries) {
        if (k == name) {
            return v;
        }
    }
    throw InvalidArgument("census entry '" + name + "' not present");
}

bool CensusReport::has(const std::string& name) const
{
    for (const auto& [k, v] : entries) {
        if (k == name) {
            return true;
        }
    }
    return false;
}

void CensusReport::add(const std::string& name, long long value)
{
    entries.emplace_back(name, value);
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

namespace {

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

}  // namespace

CensusReport quintic_census()
{
    CensusReport r;
    r.scenario = CensusScenario::Quintic;
    const int degree = 5;
    const int components = degree;        // P^3 pieces of the central fiber
    const int divisors = 3 + 1;           // toric divisors of each P^3
    const int grassmannian_degree = 2;    // deg Gr(2, 4)
    // Codimension-two strata: pairs of divisors; disjoint ones are
    // complementary pairs.
    const long long strata = binomial(divisors, 2);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < divisors; ++a) {
        for (int b = a + 1; b < divisors; ++b) {
            pairs.emplace_back(a, b);
        }
    }
    long long disjoint = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) {
                ++disjoint;
            }
        }
    }
    const long long points_per_stratum = degree;
    const long long special_points = strata * points_per_stratum;
    // Lines through such a point: intersections of the two remaining
    // quintic curves projected from it.
    const long long lines_per_point = ipow(degree, 2);
    r.add("degree", degree);
    r.add("components", components);
    r.add("grassmannian_degree", grassmannian_degree);
    r.add("codim2_strata", strata);
    r.add("points_per_stratum", points_per_stratum);
    r.add("special_points", special_points);
    r.add("lines_per_special_point", lines_per_point);
    r.add("disjoint_strata_pairs", disjoint);
    const long long incidence_total = grassmannian_degree * ipow(degree, divisors);
    const long long class2_raw = lines_per_point * special_points;
    const long long class2I = ipow(degree, 2) * disjoint;
    const long long class2 = class2_raw - class2I;
    const long long class1 = incidence_total - class2;
    r.add("incidence_total", incidence_total);
    r.add("class2_raw", class2_raw);
    r.add("class2I", class2I);
    r.add("class2", class2);
    r.add("class1", class1);
    r.add("total_3fold", class1 * components);
    return r;
}

CensusReport cubic_census(CubicMode mode)
{
    CensusReport r;
    const int degree = 3;
    if (mode == CubicMode::ToricPlanes) {
        r.scenario = CensusScenario::CubicToric;
        const int components = degree;
        const int gluing_edges = components - 1;  // edges of a plane carrying S
        const long long points_per_edge = degree;
        long long per_component = 1;
        for (int e = 0; e < gluing_edges; ++e) {
            per_component *= points_per_edge;
        }
        r.add("components", components);
        r.add("gluing_edges", gluing_edges);
        r.add("points_per_edge", points_per_edge);
        r.add("per_component", per_component);
        r.add("total", per_component * components);
        return r;
    }
    r.scenario = CensusScenario::CubicPlaneQuadric;
    const int conic_degree = 2;
    const long long singular_points = static_cast<long long>(conic_degree) * degree;
    const int rulings = 2;  // of P^1 x P^1
    const long long plane = binomial(static_cast<int>(singular_points), 2);
    const long long quadric = singular_points * rulings;
    r.add("singular_points", singular_points);
    r.add("rulings", rulings);
    r.add("plane", plane);
    r.add("quadric", quadric);
    r.add("total", plane + quadric);
    return r;
}

CensusReport k3_prelog_census(const FamilySpec& spec, bool allow_partial)
{
    spec.validate();
    if (spec.n != 3 || spec.degree != 4) {
        throw InvalidFamily("k3_prelog_census needs a quartic in P^3");
    }
    CensusReport r;
    r.scenario = CensusScenario::K3Prelog;
    long long total = 0;
    for (int k = 0; k < spec.degree; ++k) {
        const int c = spec.factor_coordinate(static_cast<std::size_t>(k));
        if (c < 0) {
            continue;
        }
        const auto lines = prelog_lines_K3(spec, component(spec, k), allow_partial);
        r.add("component_" + spec.coordinates[static_cast<std::size_t>(c)],
              static_cast<long long>(lines.size()));
        total += static_cast<long long>(lines.size());
    }
    r.add("total", total);
    return r;
}

}  // namespace degenlift
