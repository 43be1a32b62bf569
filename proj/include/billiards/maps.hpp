#ifndef BILLIARDS_MAPS_HPP
#define BILLIARDS_MAPS_HPP

#include "billiards/oval.hpp"
#include "billiards/phase.hpp"
#include "billiards/polygon.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace billiards {

/// The usual billiard map (s, alpha) -> (s1, alpha1): follow the chord
/// leaving gamma(s) at angle alpha to its second boundary intersection and
/// reflect optically. Preserves sin(alpha) ds ^ d(alpha).
PhasePoint birkhoff_map(const Oval& oval, const PhasePoint& p);

/// Puck-surface composition: the billiard map followed by the shift
/// s -> s + d*cot(alpha1) at fixed alpha1 (geodesics crossing a cylinder of
/// height d glued between two copies of the table). Refuses grazing angles
/// where the shift overflows.
PhasePoint puck_map(const Oval& oval, double height, const PhasePoint& p);

/// Outer (dual) billiard: reflect A through the forward tangency point, which
/// becomes the midpoint of [A, T(A)]. Counterclockwise convention.
Vec2 outer_map(const Oval& oval, const Vec2& A);

/// Symplectic billiard on an oval: chord xy reflects to yz where the tangent
/// at y is parallel to xz.
ChordState symplectic_map_oval(const Oval& oval, const ChordState& c);

/// Tangent-coordinate Jacobian of symplectic_map_oval at c (by implicit
/// differentiation of the parallel-tangent condition).
Eigen::Matrix2d symplectic_map_oval_jacobian(const Oval& oval, const ChordState& c, const ChordState& next);

/// Polygonal symplectic billiard: z is the first boundary hit of the line
/// through x parallel to y's edge, on the side entering the polygon. Throws
/// VertexHit (orbit truncated) when a reflection lands within
/// 1e-12 * diameter of a vertex, DegenerateChord on parallel-edge states.
PolygonChord symplectic_map_polygon(const PolygonTable& table, const PolygonChord& c);

/// Projective reflection in the pencil at a boundary point: decompose the
/// incoming direction v = a*t + b*n over the (tangent, transverse) basis and
/// return the direction of a*t - b*n, which re-enters the domain. The four
/// lines (tangent, transverse, in, out) form a harmonic quadruple.
double projective_reflect(double tangent_dir, double transverse_dir, double incoming_dir);

/// Transverse line field attached to a table boundary.
struct TransverseField {
    struct Orthogonal {};                 // normal field: reduces to the optical law
    struct OppositeVertex {};             // triangles: line through the opposite vertex
    struct DiagonalIntersection {};       // quadrilaterals: line through the diagonals' meet
    struct PerEdgeAngles { std::vector<double> angles; };
    std::variant<Orthogonal, OppositeVertex, DiagonalIntersection, PerEdgeAngles> spec;
};

/// Piecewise-smooth table (polygon or oval) carrying a transverse line field.
class ProjectiveTable {
public:
    ProjectiveTable(PolygonTable boundary, TransverseField field);
    ProjectiveTable(Oval boundary, TransverseField field);

    const PolygonTable* polygon() const { return std::get_if<PolygonTable>(&boundary_); }
    const Oval* oval() const { return std::get_if<Oval>(&boundary_); }
    const TransverseField& field() const { return field_; }
    double diameter() const;

    /// Transverse direction angle at a boundary point (edge index for
    /// polygons, curve parameter for ovals).
    double transverse_dir_polygon(int edge, const Vec2& at) const;
    double transverse_dir_oval(double t) const;

private:
    void validate() const;
    std::variant<PolygonTable, Oval> boundary_;
    TransverseField field_;
};

/// One projective-billiard step: next boundary hit of the ray, reflected by
/// the harmonic law with the local tangent and transverse line.
Ray projective_map(const ProjectiveTable& table, const Ray& ray);

/// Directions/pencils defining the two chord involutions of circle_map_f.
struct CircleMapParallel { double psi1, psi2; };
struct CircleMapPencil { Vec2 P, Q; };
using CircleMapMode = std::variant<CircleMapParallel, CircleMapPencil>;

/// Tabachnikov's circle map F: from gamma(x) draw the chord in the first
/// direction (or through the first pencil point), then from the landing point
/// the chord in the second; F(x) is the final parameter.
double circle_map_f(const Oval& oval, const CircleMapMode& mode, double x);

/// Constant-angle invariance defect: launch chords at angle delta from
/// n_samples boundary points and return max |alpha_exit - delta|. Zero iff
/// the delta-chord family is an invariant curve at this resolution.
double gutkin_defect(const Oval& oval, double delta, int n_samples);

}  // namespace billiards

#endif
