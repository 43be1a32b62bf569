#include "billiards/intersect.hpp"
#include "billiards/maps.hpp"
#include "billiards/oriented_line.hpp"

namespace billiards {

namespace {
constexpr double kTransversalityTol = 1e-9;
}

double projective_reflect(double tangent_dir, double transverse_dir, double incoming_dir) {
    const Vec2 t = unit_from_angle(tangent_dir);
    const Vec2 n = unit_from_angle(transverse_dir);
    const double det = cross2(t, n);
    if (std::abs(det) < kTransversalityTol)
        raise(ErrorCode::NotTransverse, "transverse line is parallel to the tangent");
    const Vec2 v = unit_from_angle(incoming_dir);
    // v = a*t + b*n
    const double a = cross2(v, n) / det;
    const double b = cross2(t, v) / det;
    if (std::abs(b) < kTransversalityTol * 1e-3 && std::abs(a) > 0.5)
        raise(ErrorCode::TangentialRay, "incoming ray is parallel to the tangent");
    const Vec2 w = a * t - b * n;
    return wrap_two_pi(std::atan2(w.y(), w.x()));
}

ProjectiveTable::ProjectiveTable(PolygonTable boundary, TransverseField field)
    : boundary_(std::move(boundary)), field_(std::move(field)) {
    validate();
}

ProjectiveTable::ProjectiveTable(Oval boundary, TransverseField field)
    : boundary_(std::move(boundary)), field_(std::move(field)) {
    validate();
}

double ProjectiveTable::diameter() const {
    if (const auto* poly = polygon()) return poly->diameter();
    return 2 * oval()->scale();
}

void ProjectiveTable::validate() const {
    const auto* poly = polygon();
    if (std::holds_alternative<TransverseField::OppositeVertex>(field_.spec)) {
        if (!poly || poly->size() != 3)
            raise(ErrorCode::ConfigError, "opposite-vertex field requires a triangle");
    }
    if (std::holds_alternative<TransverseField::DiagonalIntersection>(field_.spec)) {
        if (!poly || poly->size() != 4)
            raise(ErrorCode::ConfigError, "diagonal-intersection field requires a quadrilateral");
        const auto meet = intersect(OrientedLine::through_points(poly->vertex(0), poly->vertex(2)),
                                    OrientedLine::through_points(poly->vertex(1), poly->vertex(3)));
        if (!meet || !poly->contains(*meet))
            raise(ErrorCode::ConfigError, "diagonals do not meet inside the quadrilateral");
    }
    if (const auto* angles = std::get_if<TransverseField::PerEdgeAngles>(&field_.spec)) {
        if (!poly || static_cast<int>(angles->angles.size()) != poly->size())
            raise(ErrorCode::ConfigError, "per-edge field needs one angle per polygon edge");
        for (int i = 0; i < poly->size(); ++i) {
            const Vec2 e = poly->edge_vec(i).normalized();
            if (std::abs(cross2(e, unit_from_angle(angles->angles[i]))) < kTransversalityTol)
                raise(ErrorCode::ConfigError, "transverse angle parallel to edge " + std::to_string(i));
        }
    }
    // sampled transversality for polygon constructions
    if (poly) {
        for (int i = 0; i < poly->size(); ++i) {
            for (double u : {0.25, 0.5, 0.75}) {
                const Vec2 at = poly->edge_start(i) + u * poly->edge_vec(i);
                const double td = std::atan2(poly->edge_vec(i).y(), poly->edge_vec(i).x());
                const double nd = transverse_dir_polygon(i, at);
                if (std::abs(cross2(unit_from_angle(td), unit_from_angle(nd))) < kTransversalityTol)
                    raise(ErrorCode::ConfigError, "field is tangent to edge " + std::to_string(i));
            }
        }
    }
}

double ProjectiveTable::transverse_dir_polygon(int edge, const Vec2& at) const {
    const auto* poly = polygon();
    if (!poly) raise(ErrorCode::ConfigError, "polygon field query on an oval table");
    return std::visit(
        [&](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, TransverseField::Orthogonal>) {
                const Vec2 e = poly->edge_vec(edge);
                return wrap_two_pi(std::atan2(e.y(), e.x()) + kPi / 2);
            } else if constexpr (std::is_same_v<T, TransverseField::OppositeVertex>) {
                const Vec2 v = poly->vertex(edge + 2) - at;
                return wrap_two_pi(std::atan2(v.y(), v.x()));
            } else if constexpr (std::is_same_v<T, TransverseField::DiagonalIntersection>) {
                const auto meet = intersect(OrientedLine::through_points(poly->vertex(0), poly->vertex(2)),
                                            OrientedLine::through_points(poly->vertex(1), poly->vertex(3)));
                const Vec2 v = *meet - at;
                return wrap_two_pi(std::atan2(v.y(), v.x()));
            } else {
                return wrap_two_pi(f.angles[edge]);
            }
        },
        field_.spec);
}

double ProjectiveTable::transverse_dir_oval(double t) const {
    const auto* ov = oval();
    if (!ov) raise(ErrorCode::ConfigError, "oval field query on a polygon table");
    if (!std::holds_alternative<TransverseField::Orthogonal>(field_.spec))
        raise(ErrorCode::ConfigError, "oval tables support the orthogonal field");
    return wrap_two_pi(ov->tangent_angle(t) + kPi / 2);
}

Ray projective_map(const ProjectiveTable& table, const Ray& ray) {
    const Vec2 d = ray.dir_vec();
    if (const auto* poly = table.polygon()) {
        const double vtol = 1e-12 * poly->diameter();
        const auto hit = poly->ray_hit(ray.origin, d, 1e-12 * poly->diameter());
        if (!hit) raise(ErrorCode::Degenerate, "ray leaves the table without hitting the boundary");
        if (poly->vertex_distance(hit->edge, hit->offset) < vtol)
            raise(ErrorCode::VertexHit, "ray hits a vertex");
        const Vec2 e = poly->edge_vec(hit->edge);
        const double tangent_dir = std::atan2(e.y(), e.x());
        const double transverse_dir = table.transverse_dir_polygon(hit->edge, hit->point);
        const double out = projective_reflect(tangent_dir, transverse_dir, ray.direction);
        return Ray{hit->point, out};
    }
    const Oval& ov = *table.oval();
    const double t = ray_hit(ov, ray.origin, ray.direction);
    const double out = projective_reflect(ov.tangent_angle(t), table.transverse_dir_oval(t), ray.direction);
    return Ray{ov.position(t), out};
}

}  // namespace billiards
