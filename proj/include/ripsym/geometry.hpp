#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ripsym {

/// Thrown when input values violate a documented precondition
/// (non-finite coordinates, degenerate triangles, empty input, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A point of the (input variable, output variable) plane.
/// Coordinates are validated to be finite at construction.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double px, double py);

    bool operator==(const Point2&) const = default;
};

/// Oriented 2-simplex. Vertices are stored counter-clockwise; collinear
/// triples are rejected at construction (exact orientation test).
class Triangle2 {
public:
    Triangle2(const Point2& a, const Point2& b, const Point2& c);

    const Point2& vertex(int i) const { return v_[i]; }
    std::span<const Point2, 3> vertices() const { return std::span<const Point2, 3>(v_, 3); }

private:
    Point2 v_[3];
};

struct BBox {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
};

/// Closed ring of vertices (implicit edge from back to front).
using Ring = std::vector<Point2>;

/// One outer ring (counter-clockwise) plus zero or more hole rings
/// (clockwise), all simple, holes inside the outer ring.
struct PolygonWithHoles {
    Ring outer;
    std::vector<Ring> holes;
};

/// A regularized region of the plane: pairwise interior-disjoint polygons
/// with holes. All vertices lie on a fixed snapping grid (spacing 2^-29),
/// which keeps the boolean algebra exact; see boolean_op.
class PolygonSet {
public:
    PolygonSet() = default;

    /// Builds a regularized set from nested rings (per polygon: first ring
    /// outer, rest holes, GeoJSON-style). Vertices are snapped to the grid,
    /// ring orientations fixed, overlaps and self-intersections resolved by
    /// the non-zero fill rule.
    static PolygonSet from_rings(const std::vector<std::vector<Ring>>& polygons);

    const std::vector<PolygonWithHoles>& polygons() const { return polys_; }
    bool empty() const { return polys_.empty(); }

    /// Number of vertices over all rings.
    std::size_t vertex_count() const;

private:
    friend PolygonSet make_polygon_set_unchecked(std::vector<PolygonWithHoles>&&);
    std::vector<PolygonWithHoles> polys_;
};

/// Internal: wraps already-regularized polygons without re-checking them.
PolygonSet make_polygon_set_unchecked(std::vector<PolygonWithHoles>&& polys);

enum class BoolOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
};

struct UnionDiagnostics {
    std::size_t input_triangles = 0;
    std::size_t degenerate_skipped = 0;  // collapsed to zero area on the snap grid
};

/// |signed area| of the triangle (shoelace). Exact for exactly
/// representable coordinates; does not snap.
double triangle_area(const Triangle2& t);

/// Point-set union of a triangle soup. Result is independent of input
/// order; empty input gives the empty set.
PolygonSet union_triangles(std::span<const Triangle2> ts, UnionDiagnostics* diag = nullptr);

/// Regularized boolean set operation on the snapping grid. The same
/// overlay of both operands backs every op, so identities such as
/// area(a∪b) + area(a∩b) = area(a) + area(b) hold exactly.
PolygonSet boolean_op(const PolygonSet& a, const PolygonSet& b, BoolOp op);

/// Lebesgue measure of the set; holes subtract. Exact on the grid.
double area(const PolygonSet& s);

/// Tight axis-aligned box of a non-empty point cloud.
BBox bounding_box(std::span<const Point2> points);

/// Exact sign of the orientation determinant (b - a) x (c - a):
/// +1 counter-clockwise, -1 clockwise, 0 collinear. Evaluated with a
/// floating-point filter and an exact expansion fallback.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Maximum |coordinate| accepted by the snapped geometry pipeline.
/// Chosen so every predicate fits 128-bit integer arithmetic.
inline constexpr double kCoordinateLimit = 1024.0;

/// Snapping grid spacing (2^-29). Vertices of PolygonSets produced by
/// union_triangles / boolean_op lie on multiples of this.
inline constexpr double kGridSpacing = 1.0 / 536870912.0;

}  // namespace ripsym
