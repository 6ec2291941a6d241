#ifndef DEGENLIFT_SHEAF_HPP
#define DEGENLIFT_SHEAF_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "degenlift/rat.hpp"

namespace degenlift {

enum class Carrier { P1, Nodal };

// Split bundle on P^1, or on two P^1s glued at one node (one degree pair
// per summand).
struct SheafProfile {
    Carrier carrier = Carrier::P1;
    std::vector<int> degrees;
    std::vector<std::pair<int, int>> nodal_degrees;

    static SheafProfile on_p1(std::vector<int> degrees);
    static SheafProfile nodal(std::vector<std::pair<int, int>> degrees);
    std::size_t rank() const;
    std::string str() const;
};

struct Cohomology {
    long h0 = 0;
    long h1 = 0;
    friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

// Degree of the logarithmic normal bundle of a curve meeting the singular
// locus singular_hits times.
int log_normal_degree(int usual_degree, int singular_hits);

Cohomology cohomology_P1(int degree);
Cohomology cohomology(const SheafProfile& profile);

// Per summand with degrees (d1, d2) on the two components.
Cohomology nodal_cohomology(int d1, int d2);
Cohomology nodal_cohomology(const SheafProfile& profile);

using Vec2 = std::array<long, 2>;

struct DualObstructionBasis {
    std::array<Vec2, 3> edges;
    std::array<Vec2, 3> covectors;  // covectors[i] annihilates edges[i]
    std::array<Rat, 3> kernel;      // weights w with sum w_i covectors[i] = 0
};

// Covectors are the edges turned by a quarter turn, (p, q) -> (-q, p).
// Throws Unbalanced when the edges are not primitive or do not sum to zero.
DualObstructionBasis dual_obstruction_basis(const std::array<Vec2, 3>& edges);

struct DiskProfile {
    SheafProfile profile;
    int family_dimension = 0;
    long h1 = 0;
};

DiskProfile disk_profile(int n);

}  // namespace degenlift

#endif
