#ifndef DEGENLIFT_FAMILY_HPP
#define DEGENLIFT_FAMILY_HPP

#include <map>
#include <string>
#include <vector>

#include "degenlift/poly.hpp"
#include "degenlift/rat.hpp"

namespace degenlift {

// The degeneration prod(factors) + t*f = 0 of a degree-d hypersurface in P^n.
struct FamilySpec {
    int n = 3;
    int degree = 4;
    std::vector<std::string> coordinates;  // n+1 names in index order
    std::vector<Poly> factors;             // degree many linear forms
    Poly f;
    std::vector<std::string> params;
    std::string chart;  // default inhomogenization; empty means the last coordinate

    // Throws InvalidFamily, NonHomogeneous or UnknownVariable.
    void validate() const;

    int coordinate_index(const std::string& name) const;  // -1 if absent
    // Index of the coordinate equal to factors[k] up to scaling, or -1.
    int factor_coordinate(std::size_t k) const;
    // Factor index whose form is the given coordinate, or -1.
    int factor_of_coordinate(int coord) const;
    std::string chart_coordinate() const;

    // Same family with some parameters replaced by values.
    FamilySpec specialized(const std::map<std::string, Rat>& values) const;
    bool is_symbolic() const { return !params.empty(); }

    friend bool operator==(const FamilySpec& a, const FamilySpec& b);
};

enum class StratumKind { Component, Divisor, Edge, Point };

const char* to_string(StratumKind k);

// Toric stratum {a_i = 0 for i in factors}. Every factor must be a
// coordinate. The chart names the coordinate set to 1 (empty: homogeneous).
struct Stratum {
    std::vector<int> factors;
    std::string chart;

    int dimension(const FamilySpec& spec) const;
    StratumKind kind(const FamilySpec& spec) const;
    // Coordinates not set to zero on the stratum, in index order.
    std::vector<int> free_coordinates(const FamilySpec& spec) const;
    std::string str(const FamilySpec& spec) const;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

// Validates and normalizes (sorted indices, chart checked).
Stratum make_stratum(const FamilySpec& spec, std::vector<int> factors, std::string chart = "");
Stratum component(const FamilySpec& spec, int factor);
// The edge strata contained in a component, in factor order.
std::vector<Stratum> component_edges(const FamilySpec& spec, const Stratum& comp);
std::vector<Stratum> all_edges(const FamilySpec& spec);

// Edge coordinate u and chart coordinate v of a one-dimensional stratum.
struct EdgeChart {
    int u = -1;
    int v = -1;
};
EdgeChart edge_chart(const FamilySpec& spec, const Stratum& edge);

struct SingularPoint {
    Stratum host;
    Rat coordinate;          // u/v in the host's edge chart
    std::vector<Rat> point;  // homogeneous, last nonzero entry equal to 1
};

struct EdgeLocus {
    std::vector<SingularPoint> points;  // sorted by coordinate
    int unresolved = 0;                 // roots that are not rational
    int fixed_point_roots = 0;          // roots at torus fixed points
};

Poly total_equation(const FamilySpec& spec);
// f with the stratum's coordinates set to zero, dehomogenized by the
// stratum's chart if it has one.
Poly restrict_to_stratum(const FamilySpec& spec, const Stratum& st);
EdgeLocus singular_points_on_edge(const FamilySpec& spec, const Stratum& edge);
bool is_ordinary_singularity(const FamilySpec& spec, const SingularPoint& p);

// Scales a homogeneous point so that its last nonzero entry is 1.
std::vector<Rat> normalize_point(std::vector<Rat> p);
std::string point_str(const std::vector<Rat>& p);

// Exact rational roots of a univariate polynomial over Q with their
// multiplicities, ascending.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p, const std::string& var);

}  // namespace degenlift

#endif
