#ifndef BILLIARDS_POLYGON_HPP
#define BILLIARDS_POLYGON_HPP

#include "billiards/core.hpp"

#include <optional>
#include <vector>

namespace billiards {

/// Simple polygon with counterclockwise vertex order. Immutable; queries are
/// pure. Boundary points are addressed by the arclength coordinate sigma in
/// [0, perimeter), measured from vertex 0.
class PolygonTable {
public:
    explicit PolygonTable(std::vector<Vec2> vertices);

    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<Vec2>& vertices() const { return verts_; }
    Vec2 vertex(int i) const { return verts_[index(i)]; }
    Vec2 edge_start(int i) const { return verts_[index(i)]; }
    Vec2 edge_vec(int i) const { return verts_[index(i + 1)] - verts_[index(i)]; }
    double edge_length(int i) const { return len_[index(i)]; }
    double perimeter() const { return perimeter_; }
    double diameter() const { return diameter_; }

    Vec2 point_at(double sigma) const;
    /// (edge index, offset along the edge in length units)
    std::pair<int, double> edge_coord(double sigma) const;
    double sigma_of(int edge, double offset) const;

    bool contains(const Vec2& p) const;  // strict interior

    struct Hit {
        int edge;
        double offset;     // along the edge, in length units
        double ray_param;  // distance along the ray
        Vec2 point;
    };
    /// First boundary intersection of the ray from `from` along unit `dir`,
    /// ignoring hits closer than `min_param`.
    std::optional<Hit> ray_hit(const Vec2& from, const Vec2& dir, double min_param) const;

    /// Distance from a boundary point (given as a hit) to the nearest vertex.
    double vertex_distance(int edge, double offset) const;

private:
    int index(int i) const {
        const int n = size();
        return ((i % n) + n) % n;
    }

    std::vector<Vec2> verts_;
    std::vector<double> len_, cum_;
    double perimeter_ = 0, diameter_ = 0;
};

}  // namespace billiards

#endif
