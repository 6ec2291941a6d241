#ifndef DEGENLIFT_CENSUS_HPP
#define DEGENLIFT_CENSUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "degenlift/family.hpp"

namespace degenlift {

enum class CensusScenario { Quintic, CubicToric, CubicPlaneQuadric, K3Prelog };
enum class CubicMode { ToricPlanes, PlaneQuadric };

const char* to_string(CensusScenario s);

struct CensusReport {
    CensusScenario scenario = CensusScenario::Quintic;
    // Named counts in derivation order: input factors first, then totals.
    std::vector<std::pair<std::string, long long>> entries;

    // Throws InvalidArgument for an unknown name.
    long long get(const std::string& name) const;
    bool has(const std::string& name) const;
    void add(const std::string& name, long long value);
};

long long binomial(int n, int k);

// Lines of the degenerate quintic threefold, counted per P^3 component.
CensusReport quintic_census();
CensusReport cubic_census(CubicMode mode);
// Pre-log lines per coordinate component of a K3-type family.
CensusReport k3_prelog_census(const FamilySpec& spec, bool allow_partial = false);

}  // namespace degenlift

#endif
