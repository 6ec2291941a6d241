#ifndef DEGENLIFT_LIFTER_HPP
#define DEGENLIFT_LIFTER_HPP

#include <map>
#include <string>
#include <vector>

#include "degenlift/family.hpp"
#include "degenlift/lines.hpp"
#include "degenlift/linalg.hpp"
#include "degenlift/series.hpp"

namespace degenlift {

// Affine chart v = 1 of the line's plane in which the lift is sought:
//   p = s,  q = q0 + q1*s + sum_j t^j (a_j s + b_j),
//   normal = sum_j t^j (c_j s + d_j).
struct LiftFrame {
    int component = -1;  // factor index
    int normal = -1;     // coordinate indices
    int p = -1;
    int q = -1;
    int v = -1;
    Rat q0;
    Rat q1;
};

struct LiftOptions {
    std::string chart;  // coordinate set to 1; empty picks a default
    // Adds the shift p = s + t*e1 of the curve parameter as an extra unknown.
    bool reparametrization_unknown = false;
};

struct OrderStep {
    int order = 0;
    std::vector<std::string> unknowns;  // e.g. c2, d2, a1, b1
    Matrix<Poly> matrix;                // rows are powers of s
    std::vector<Poly> rhs;
    std::vector<Poly> conditions;
    std::map<std::string, RatFunc> values;
    bool unique = false;
};

enum class LiftStatus { Solved, Obstructed };

struct LiftResult {
    LiftFrame frame;
    LiftStatus status = LiftStatus::Solved;
    int order = 0;  // N when solved, the failing order when obstructed
    std::vector<OrderStep> steps;
    std::map<std::string, RatFunc> coefficients;
    std::vector<Poly> obstruction_ideal;
};

LiftFrame lift_frame(const FamilySpec& spec, const Line& line, const std::string& chart = "");

LiftResult lift_solve(const FamilySpec& spec, const Line& line, int order,
                      const LiftOptions& options = {});
std::vector<Poly> obstruction_ideal(const FamilySpec& spec, const Line& line, int order,
                                    const LiftOptions& options = {});

// Affine coordinates (chart v = 1, in coordinate order) of the ansatz with
// the solved values, keeping the plane corrections through plane_order and
// the normal ones through normal_order. Entries are polynomials in s and t
// with coefficients in the parameters.
std::vector<RatFunc> lift_ansatz(const FamilySpec& spec, const LiftResult& result, int plane_order,
                                 int normal_order);

// The total equation evaluated on the solved ansatz, as a series in t.
Series lift_residual(const FamilySpec& spec, const LiftResult& result);

// Lifts X = s, Z = s*zeta(s), Y = 0 in the model XY + tZ = 0 through order
// N and checks that every Z-correction is divisible by s.
bool model_case_check(const Poly& zeta, int order);

}  // namespace degenlift

#endif
