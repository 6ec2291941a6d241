#ifndef DEGENLIFT_LINES_HPP
#define DEGENLIFT_LINES_HPP

#include <string>
#include <vector>

#include "degenlift/family.hpp"
#include "degenlift/linalg.hpp"

namespace degenlift {

using Point = std::vector<Rat>;

// A projective line, stored as the reduced row echelon basis of its span
// together with a canonical set of defining linear equations.
struct Line {
    Point p;  // the two spanning points as given (normalized)
    Point q;
    Matrix<Rat> basis;                 // 2 x (n+1), reduced row echelon
    std::vector<std::vector<Rat>> equations;  // primitive integer covectors

    bool contains(const Point& pt) const;
    // Intersection with the hyperplane {coordinate = 0}; throws InvalidLine
    // if the line lies inside it.
    Point meet_coordinate(int coordinate) const;
    std::vector<Poly> equation_polys(const std::vector<std::string>& coords) const;
    std::string str(const std::vector<std::string>& coords) const;

    friend bool operator==(const Line& a, const Line& b) { return a.basis == b.basis; }
    friend bool operator<(const Line& a, const Line& b);
};

Line line_through(const Point& p, const Point& q);
bool collinear(const Point& p, const Point& q, const Point& r);

// Factor index of the component containing the line; throws InvalidLine if
// the line lies in no component or in several.
int line_component(const FamilySpec& spec, const Line& line);
// True iff the line avoids the torus fixed points of its component.
bool torically_transverse(const FamilySpec& spec, const Line& line);

enum class HitFlag { InS, NotInS, Deeper };
enum class LineClass { PrelogOk, PrelogFail, Class1, Class2I, Class2II };
const char* to_string(HitFlag f);
const char* to_string(LineClass c);

struct DivisorHit {
    int factor = -1;  // divisor {component = factor = 0}
    Point point;
    HitFlag flag = HitFlag::NotInS;
    std::vector<int> deeper;  // further factors vanishing at the point
};

struct IncidenceProfile {
    int component = -1;
    std::vector<DivisorHit> hits;
    std::vector<LineClass> tags;
    bool has(LineClass c) const;
};

IncidenceProfile incidence_profile(const FamilySpec& spec, const Line& line);

// Lines of a K3-type component meeting its three edges in singular points.
// With allow_partial, edges with irrational roots contribute their rational
// points only instead of raising IncompleteLocus. edge_order permutes the
// roles of the three edges in the search (identity when empty).
std::vector<Line> prelog_lines_K3(const FamilySpec& spec, const Stratum& comp,
                                  bool allow_partial = false,
                                  const std::vector<int>& edge_order = {});
// Lines of a cubic component through one singular point on each of its two
// gluing edges, excluding lines through torus fixed points.
std::vector<Line> prelog_lines_cubic(const FamilySpec& spec, const Stratum& comp,
                                     bool allow_partial = false);
// Class tags for a line in a component of the quintic central fiber.
IncidenceProfile classify_quintic_line(const Line& line, const FamilySpec& spec);

}  // namespace degenlift

#endif
