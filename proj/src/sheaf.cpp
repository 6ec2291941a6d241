#include "degenlift/sheaf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "degenlift/errors.hpp"
#include "degenlift/linalg.hpp"

namespace degenlift {

SheafProfile SheafProfile::on_p1(std::vector<int> degrees)
{
    SheafProfile p;
    p.carrier = Carrier::P1;
    p.degrees = std::move(degrees);
    return p;
}

SheafProfile SheafProfile::nodal(std::vector<std::pair<int, int>> degrees)
{
    SheafProfile p;
    p.carrier = Carrier::Nodal;
    p.nodal_degrees = std::move(degrees);
    return p;
}

std::size_t SheafProfile::rank() const
{
    return carrier == Carrier::P1 ? degrees.size() : nodal_degrees.size();
}

std::string SheafProfile::str() const
{
    std::ostringstream os;
    os << "[";
    if (carrier == Carrier::P1) {
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            os << (i ? ", " : "") << degrees[i];
        }
    } else {
        for (std::size_t i = 0; i < nodal_degrees.size(); ++i) {
            os << (i ? ", " : "") << "(" << nodal_degrees[i].first << ", "
               << nodal_degrees[i].second << ")";
        }
    }
    os << "]";
    return os.str();
}

int log_normal_degree(int usual_degree, int singular_hits)
{
    if (singular_hits < 0) {
        throw InvalidArgument("singular_hits must be non-negative");
    }
    return usual_degree - singular_hits;
}

Cohomology cohomology_P1(int degree)
{
    return {std::max<long>(degree + 1, 0), std::max<long>(-degree - 1, 0)};
}

Cohomology cohomology(const SheafProfile& profile)
{
    if (profile.carrier == Carrier::Nodal) {
        return nodal_cohomology(profile);
    }
    Cohomology total;
    for (int d : profile.degrees) {
        const auto c = cohomology_P1(d);
        total.h0 += c.h0;
        total.h1 += c.h1;
    }
    return total;
}

Cohomology nodal_cohomology(int d1, int d2)
{
    // Sections on each component that agree at the node. The difference of
    // the two values at the node is onto C as soon as one side has a section
    // not vanishing there, i.e. has nonnegative degree.
    const long sections = std::max(d1 + 1, 0) + std::max(d2 + 1, 0);
    const long node_rank = (d1 >= 0 || d2 >= 0) ? 1 : 0;
    const long h0 = sections - node_rank;
    const long chi = static_cast<long>(d1) + d2 + 1;
    return {h0, h0 - chi};
}

Cohomology nodal_cohomology(const SheafProfile& profile)
{
    if (profile.carrier != Carrier::Nodal) {
        throw InvalidArgument("nodal_cohomology needs a nodal profile");
    }
    Cohomology total;
    for (const auto& [d1, d2] : profile.nodal_degrees) {
        const auto c = nodal_cohomology(d1, d2);
        total.h0 += c.h0;
        total.h1 += c.h1;
    }
    return total;
}

DualObstructionBasis dual_obstruction_basis(const std::array<Vec2, 3>& edges)
{
    Vec2 sum{0, 0};
    for (const auto& e : edges) {
        if (std::gcd(e[0], e[1]) != 1) {
            throw Unbalanced("edge (" + std::to_string(e[0]) + ", " + std::to_string(e[1]) +
                             ") is not primitive");
        }
        sum[0] += e[0];
        sum[1] += e[1];
    }
    if (sum[0] != 0 || sum[1] != 0) {
        throw Unbalanced("edges do not sum to zero");
    }
    DualObstructionBasis out;
    out.edges = edges;
    for (std::size_t i = 0; i < 3; ++i) {
        out.covectors[i] = {-edges[i][1], edges[i][0]};
    }
    Matrix<Rat> m(2, std::vector<Rat>(3));
    for (std::size_t i = 0; i < 3; ++i) {
        m[0][i] = Rat(out.covectors[i][0]);
        m[1][i] = Rat(out.covectors[i][1]);
    }
    const auto ker = nullspace(m, 3);
    if (ker.size() != 1) {
        throw Unbalanced("edges do not span the plane");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        out.kernel[i] = ker[0][i];
    }
    return out;
}

DiskProfile disk_profile(int n)
{
    if (n < 3) {
        throw InvalidArgument("disk_profile needs n >= 3, got " + std::to_string(n));
    }
    DiskProfile out;
    if (n == 3) {
        out.profile = SheafProfile::on_p1({-1});
        out.family_dimension = 0;
    } else {
        std::vector<int> degrees{-1, -1};
        degrees.resize(static_cast<std::size_t>(n - 2), 0);
        out.profile = SheafProfile::on_p1(degrees);
        // Real sections of the trivial summands plus the torus directions.
        out.family_dimension = (n - 4) + (n - 2);
    }
    out.h1 = cohomology(out.profile).h1;
    return out;
}

}  // namespace degenlift
