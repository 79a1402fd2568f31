#include "ripsym/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace ripsym {

RecenterResult recenter(std::span<const double> xs, std::span<const double> ys) {
    if (xs.empty() || xs.size() != ys.size())
        throw invalid_input("recenter: inputs must be non-empty and of equal length");
    RecenterResult r;
    r.x_min = *std::min_element(xs.begin(), xs.end());
    r.y_min = *std::min_element(ys.begin(), ys.end());
    if (!std::isfinite(r.x_min) || !std::isfinite(r.y_min))
        throw invalid_input("recenter: non-finite values");
    r.xs.reserve(xs.size());
    r.ys.reserve(ys.size());
    for (double v : xs) r.xs.push_back(v - r.x_min);
    for (double v : ys) r.ys.push_back(v - r.y_min);
    return r;
}

double y_mid(std::span<const double> ys) {
    if (ys.empty()) throw invalid_input("y_mid: empty input");
    auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
    return (*lo + *hi) / 2.0;
}

AffineMap2 reflection_map(double y_mid_value) {
    if (!std::isfinite(y_mid_value)) throw invalid_input("reflection_map: y_mid must be finite");
    AffineMap2 m;
    m.a << 1.0, 0.0, 0.0, -1.0;
    m.b << 0.0, 2.0 * y_mid_value;
    return m;
}

std::vector<Triangle2> reflect_complex(const AffineMap2& map, std::span<const Triangle2> triangles) {
    std::vector<Triangle2> out;
    out.reserve(triangles.size());
    for (const Triangle2& t : triangles)
        out.emplace_back(map.apply(t.vertex(0)), map.apply(t.vertex(1)), map.apply(t.vertex(2)));
    return out;
}

PolygonSet reflect_polygon_set(const PolygonSet& s, double y_mid_value) {
    if (!std::isfinite(y_mid_value)) throw invalid_input("reflect_polygon_set: y_mid must be finite");
    // the doubled mid-line rounded to the grid; all set vertices are
    // grid-aligned, so m - y is exact in doubles
    double m = std::round(2.0 * y_mid_value / kGridSpacing) * kGridSpacing;
    auto flip_ring = [&](const Ring& r) {
        Ring out;
        out.reserve(r.size());
        for (auto it = r.rbegin(); it != r.rend(); ++it) out.push_back(Point2(it->x, m - it->y));
        return out;
    };
    std::vector<PolygonWithHoles> polys;
    polys.reserve(s.polygons().size());
    for (const PolygonWithHoles& p : s.polygons()) {
        PolygonWithHoles q;
        q.outer = flip_ring(p.outer);
        q.holes.reserve(p.holes.size());
        for (const Ring& h : p.holes) q.holes.push_back(flip_ring(h));
        polys.push_back(std::move(q));
    }
    return make_polygon_set_unchecked(std::move(polys));
}

}  // namespace ripsym
