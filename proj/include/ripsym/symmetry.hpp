#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "ripsym/geometry.hpp"

namespace ripsym {

/// Affine transform p -> a p + b with invertible a. The reflection used by
/// the pipeline is a = diag(1, -1), b = (0, 2 y_mid).
struct AffineMap2 {
    Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
    Eigen::Vector2d b = Eigen::Vector2d::Zero();

    Point2 apply(const Point2& p) const {
        Eigen::Vector2d q = a * Eigen::Vector2d(p.x, p.y) + b;
        return Point2(q.x(), q.y());
    }
};

struct RecenterResult {
    std::vector<double> xs;
    std::vector<double> ys;
    double x_min = 0.0;
    double y_min = 0.0;
};

/// Shift both coordinate lists so their minima are exactly zero; the
/// original minima are returned for traceability.
RecenterResult recenter(std::span<const double> xs, std::span<const double> ys);

/// Midrange (min + max) / 2 of the output values.
double y_mid(std::span<const double> ys);

/// Reflection through the horizontal line y = y_mid:
/// (x, y) -> (x, 2 y_mid - y).
AffineMap2 reflection_map(double y_mid_value);

/// Applies the map to every triangle. Orientation is re-normalized by the
/// Triangle2 constructor (a reflection reverses it); the count is preserved.
std::vector<Triangle2> reflect_complex(const AffineMap2& map, std::span<const Triangle2> triangles);

/// Mirror of an already-unioned region through y = y_mid, computed on the
/// snapping grid. Equal to union_triangles(reflect_complex(...)) because
/// the grid reflection is exact; reuses the realized geometry instead of
/// re-running the union.
PolygonSet reflect_polygon_set(const PolygonSet& s, double y_mid_value);

}  // namespace ripsym
