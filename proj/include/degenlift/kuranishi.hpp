#ifndef DEGENLIFT_KURANISHI_HPP
#define DEGENLIFT_KURANISHI_HPP

#include <map>
#include <string>
#include <vector>

#include "degenlift/family.hpp"
#include "degenlift/lines.hpp"
#include "degenlift/ratfunc.hpp"

namespace degenlift {

// Order in which f = (u - alpha) f1 + cross f2 + normal f3 is split.
//   EdgeFirst:       f1 from the edge restriction, then f2, then f3.
//   NormalFirst:     f1 from the edge restriction, then f3, then f2.
//   SubstituteFirst: f2, f3 from f at u = alpha, then f1 as the quotient.
enum class Decomposition { EdgeFirst, NormalFirst, SubstituteFirst };

const char* to_string(Decomposition d);

// Local data at a singular point p of the line. In the affine chart v = 1
// the point sits on the edge {cross = normal = 0} at u = alpha, and
//   f = (u - alpha) f1 + cross f2 + normal f3,
//   f4 = f3 / E,  f5 = -f2 f3 / E,
// where E is the product of the remaining factors (so E(p) = alpha for
// a K3 component).
struct LocalFrame {
    SingularPoint point;
    int u = -1;
    int v = -1;
    int cross = -1;
    int normal = -1;
    Rat alpha;
    RatFunc slope;  // d(u - alpha)/d(cross) along the line
    Poly F;         // f in the chart
    Poly E;
    Poly f1, f2, f3;
    RatFunc f4, f5;
    RatFunc unit_check;  // f1(p)
    std::map<std::string, Rat> origin;  // local coordinates of p: u = alpha, cross = normal = 0
    // +1 when u/v is the component's cyclic edge coordinate at p, -1 when it
    // is its inverse.
    int orientation = 1;
    Decomposition decomposition = Decomposition::EdgeFirst;

    RatFunc weight() const { return RatFunc(Rat(orientation) / alpha); }
};

struct ResidueDatum {
    LocalFrame frame;
    int order = 1;
    RatFunc b;
};

struct KuranishiValue {
    int order = 1;
    RatFunc value;
    Poly vanishing_condition;  // primitive numerator of value
    std::vector<ResidueDatum> residues;
};

// The singular points where the line meets the edges of its component.
// Throws InvalidLine if a meeting point is not in the singular locus.
std::vector<SingularPoint> line_singular_points(const FamilySpec& spec, const Line& line);

LocalFrame local_frame(const FamilySpec& spec, const Line& line, const SingularPoint& p,
                       Decomposition order = Decomposition::EdgeFirst,
                       const std::string& chart = "");
ResidueDatum first_order_residue(const LocalFrame& frame);

// chart names the coordinate set to 1 at every point whose edge admits it;
// other points keep their default chart.
KuranishiValue kuranishi_first_order(const FamilySpec& spec, const Line& line,
                                     Decomposition order = Decomposition::EdgeFirst,
                                     const std::string& chart = "");

// Order-k value computed by expanding the local model along the lift
// solved through order k. Needs a family without free parameters.
KuranishiValue kuranishi_series(const FamilySpec& spec, const Line& line, int k);

// Throws ObstructedAtLowerOrder(j) if some order j < k is nonzero.
KuranishiValue kuranishi_higher(const FamilySpec& spec, const Line& line, int k);

// Vector field on the class-2 local model xyz + tw = 0, given by its
// coefficients on d/dx, d/dy, d/dz, d/dw, d/dt.
using VectorField = std::map<std::string, Poly>;

struct LogTangentResult {
    bool member = false;
    bool logarithmic = false;  // d/dz and d/dt coefficients divisible by z and t
    std::vector<RatFunc> log_coefficients;  // on x d/dx, ..., t d/dt along the curve
    std::vector<RatFunc> combination;       // generator weights when member
};

// Parses "x*dx + y*dy + w*dw" style input.
VectorField parse_vector_field(const std::string& text);
LogTangentResult log_tangent_check(const VectorField& v);
bool log_tangent_membership(const VectorField& v);

}  // namespace degenlift

#endif
