#ifndef DEGENLIFT_FIXTURES_HPP
#define DEGENLIFT_FIXTURES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degenlift/family.hpp"

namespace degenlift {

// Families with prescribed rational singular points. On the edge whose
// free coordinates are (u, v) (index order) f restricts to
// corner[u] * prod(u - r_i v); the last root may be left out, in which case
// it is forced by the corner coefficients.
struct FixtureRecipe {
    int n = 3;
    int degree = 4;
    std::vector<std::string> coordinates;
    std::vector<std::string> factor_coordinates;
    std::vector<std::string> params;
    std::map<std::string, Rat> corners;
    std::map<std::pair<std::string, std::string>, std::vector<Rat>> edge_roots;
    Poly extra;  // must vanish on every edge
    std::string chart;
};

FamilySpec build_fixture(const FixtureRecipe& recipe);

// The symbolic quartic K3 family with parameters a, b used throughout the
// documentation and tests.
FamilySpec quartic_k3_example();

// A cubic xyz + t f with three rational singular points on every edge.
FamilySpec cubic_rational_fixture();

// Point of the edge {all coordinates except u, v vanish} with u/v = r.
std::vector<Rat> edge_point(std::size_t dim, int u, int v, const Rat& r);

}  // namespace degenlift

#endif
