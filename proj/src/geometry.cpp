#include "ripsym/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "overlay.hpp"

namespace ripsym {

using detail::i128;
using detail::i64;
using detail::IVec;
using detail::kScale;

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw invalid_input(std::string(what) + ": coordinate is not finite");
}

IVec snap(const Point2& p) {
    if (std::fabs(p.x) > kCoordinateLimit || std::fabs(p.y) > kCoordinateLimit)
        throw invalid_input("coordinate exceeds the supported range (|x|, |y| <= 1024)");
    return IVec{i64(std::llround(p.x * double(kScale))), i64(std::llround(p.y * double(kScale)))};
}

Point2 unsnap(const IVec& p) {
    return Point2(double(p.x) / double(kScale), double(p.y) / double(kScale));
}

bool pred_a(i64 wa, i64) { return wa != 0; }
bool pred_union(i64 wa, i64 wb) { return wa != 0 || wb != 0; }
bool pred_inter(i64 wa, i64 wb) { return wa != 0 && wb != 0; }
bool pred_diff(i64 wa, i64 wb) { return wa != 0 && wb == 0; }
bool pred_xor(i64 wa, i64 wb) { return (wa != 0) != (wb != 0); }

// Emit the ring boundary as weight-one segments (interior on the left for
// counter-clockwise outers and clockwise holes alike).
void ring_segments(const Ring& ring, bool as_b, std::vector<detail::WSeg>& out) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
        IVec u = snap(ring[i]);
        IVec v = snap(ring[(i + 1) % ring.size()]);
        detail::WSeg s{u, v, as_b ? 0 : 1, as_b ? 1 : 0};
        out.push_back(s);
    }
}

PolygonSet assemble(const std::vector<std::vector<IVec>>& int_rings);

PolygonSet select(const detail::Overlay& ov, detail::FacePredicate pred) {
    return assemble(detail::extract_rings(ov, pred));
}

// Turns the ring soup of an overlay selection (outers counter-clockwise,
// holes clockwise) into polygons with holes by exact containment tests.
PolygonSet assemble(const std::vector<std::vector<IVec>>& int_rings) {
    struct RingInfo {
        const std::vector<IVec>* pts;
        i128 area2;
    };
    std::vector<RingInfo> outers, holes;
    for (const auto& r : int_rings) {
        i128 a2 = detail::ring_doubled_area_i(r);
        if (a2 > 0) outers.push_back(RingInfo{&r, a2});
        else if (a2 < 0) holes.push_back(RingInfo{&r, a2});
    }
    std::vector<std::size_t> order(outers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return outers[i].area2 < outers[j].area2; });

    std::vector<PolygonWithHoles> polys(outers.size());
    for (std::size_t i = 0; i < outers.size(); ++i) {
        polys[i].outer.reserve(outers[i].pts->size());
        for (const IVec& p : *outers[i].pts) polys[i].outer.push_back(unsnap(p));
    }
    for (const RingInfo& h : holes) {
        // interior probe: midpoint of the first hole edge, in doubled coords
        const std::vector<IVec>& r = *h.pts;
        i64 px2 = r[0].x + r[1].x;
        i64 py2 = r[0].y + r[1].y;
        std::size_t owner = outers.size();
        for (std::size_t oi : order) {  // smallest containing outer wins
            if (detail::point_in_ring_doubled(px2, py2, *outers[oi].pts) > 0) {
                owner = oi;
                break;
            }
        }
        if (owner == outers.size()) continue;  // cannot happen for well-formed selections
        Ring hr;
        hr.reserve(r.size());
        for (const IVec& p : r) hr.push_back(unsnap(p));
        polys[owner].holes.push_back(std::move(hr));
    }
    return make_polygon_set_unchecked(std::move(polys));
}

}  // namespace

PolygonSet make_polygon_set_unchecked(std::vector<PolygonWithHoles>&& polys) {
    PolygonSet s;
    s.polys_ = std::move(polys);
    return s;
}

Point2::Point2(double px, double py) : x(px), y(py) {
    require_finite(px, "Point2");
    require_finite(py, "Point2");
}

Triangle2::Triangle2(const Point2& a, const Point2& b, const Point2& c) : v_{a, b, c} {
    int o = orient2d(a, b, c);
    if (o == 0) throw invalid_input("Triangle2: vertices are collinear");
    if (o < 0) std::swap(v_[1], v_[2]);
}

double triangle_area(const Triangle2& t) {
    const Point2& a = t.vertex(0);
    const Point2& b = t.vertex(1);
    const Point2& c = t.vertex(2);
    double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return 0.5 * std::fabs(cross);
}

std::size_t PolygonSet::vertex_count() const {
    std::size_t n = 0;
    for (const auto& p : polys_) {
        n += p.outer.size();
        for (const auto& h : p.holes) n += h.size();
    }
    return n;
}

namespace {

struct SnappedTri {
    IVec v[3];  // counter-clockwise on the grid
};

// Morton code over 21-bit quantized coordinates, for spatial sorting.
std::uint64_t morton_key(std::uint64_t qx, std::uint64_t qy) {
    auto spread = [](std::uint64_t v) {
        v &= 0x1fffff;
        v = (v | (v << 32)) & 0x1f00000000ffffULL;
        v = (v | (v << 16)) & 0x1f0000ff0000ffULL;
        v = (v | (v << 8)) & 0x100f00f00f00f00fULL;
        v = (v | (v << 4)) & 0x10c30c30c30c30c3ULL;
        v = (v | (v << 2)) & 0x1249249249249249ULL;
        return v;
    };
    return spread(qx) | (spread(qy) << 1);
}

void append_triangle_segments(const SnappedTri& t, std::vector<detail::WSeg>& segs) {
    segs.push_back(detail::WSeg{t.v[0], t.v[1], 1, 0});
    segs.push_back(detail::WSeg{t.v[1], t.v[2], 1, 0});
    segs.push_back(detail::WSeg{t.v[2], t.v[0], 1, 0});
}

void append_polyset_segments(const PolygonSet& ps, bool as_b, std::vector<detail::WSeg>& segs) {
    for (const PolygonWithHoles& p : ps.polygons()) {
        ring_segments(p.outer, as_b, segs);
        for (const Ring& h : p.holes) ring_segments(h, as_b, segs);
    }
}

// Union of a spatially sorted triangle range. Large ranges are merged in
// wide fans so the arrangement size tracks union boundaries rather than
// soup size; the result is identical to a one-shot overlay because all
// intermediate rings stay on the grid.
PolygonSet union_range(std::span<const SnappedTri> tris) {
    constexpr std::size_t kLeaf = 512;
    constexpr std::size_t kFan = 8;
    std::vector<detail::WSeg> segs;
    if (tris.size() <= kLeaf) {
        segs.reserve(tris.size() * 3);
        for (const SnappedTri& t : tris) append_triangle_segments(t, segs);
    } else {
        std::size_t chunk = (tris.size() + kFan - 1) / kFan;
        for (std::size_t start = 0; start < tris.size(); start += chunk) {
            PolygonSet part = union_range(tris.subspan(start, std::min(chunk, tris.size() - start)));
            append_polyset_segments(part, false, segs);
        }
    }
    if (segs.empty()) return PolygonSet();
    detail::Overlay ov = detail::build_overlay(std::move(segs));
    return select(ov, pred_a);
}

}  // namespace

PolygonSet union_triangles(std::span<const Triangle2> ts, UnionDiagnostics* diag) {
    if (diag) *diag = UnionDiagnostics{ts.size(), 0};
    std::vector<SnappedTri> tris;
    tris.reserve(ts.size());
    for (const Triangle2& t : ts) {
        SnappedTri s{{snap(t.vertex(0)), snap(t.vertex(1)), snap(t.vertex(2))}};
        i128 o = i128(s.v[1].x - s.v[0].x) * (s.v[2].y - s.v[0].y) -
                 i128(s.v[1].y - s.v[0].y) * (s.v[2].x - s.v[0].x);
        if (o == 0) {
            if (diag) diag->degenerate_skipped++;
            continue;
        }
        if (o < 0) std::swap(s.v[1], s.v[2]);
        // rotate so the lexicographically smallest vertex leads; together
        // with the sort below this makes the union order-canonical
        int lead = 0;
        for (int i = 1; i < 3; ++i)
            if (detail::lex_less(s.v[i], s.v[lead])) lead = i;
        std::rotate(s.v, s.v + lead, s.v + 3);
        tris.push_back(s);
    }
    if (tris.empty()) return PolygonSet();

    // canonical spatial order: result independent of input order
    i64 minx = tris[0].v[0].x, miny = tris[0].v[0].y;
    i64 maxx = minx, maxy = miny;
    for (const SnappedTri& t : tris)
        for (const IVec& v : t.v) {
            minx = std::min(minx, v.x);
            maxx = std::max(maxx, v.x);
            miny = std::min(miny, v.y);
            maxy = std::max(maxy, v.y);
        }
    i64 extent = std::max<i64>(std::max(maxx - minx, maxy - miny), 1);
    int shift = 0;
    while ((extent >> shift) >= (i64(1) << 21)) ++shift;
    auto tri_less = [&](const SnappedTri& a, const SnappedTri& b) {
        IVec ca{(a.v[0].x + a.v[1].x + a.v[2].x) / 3, (a.v[0].y + a.v[1].y + a.v[2].y) / 3};
        IVec cb{(b.v[0].x + b.v[1].x + b.v[2].x) / 3, (b.v[0].y + b.v[1].y + b.v[2].y) / 3};
        std::uint64_t ka = morton_key(std::uint64_t(ca.x - minx) >> shift, std::uint64_t(ca.y - miny) >> shift);
        std::uint64_t kb = morton_key(std::uint64_t(cb.x - minx) >> shift, std::uint64_t(cb.y - miny) >> shift);
        if (ka != kb) return ka < kb;
        for (int i = 0; i < 3; ++i) {
            if (a.v[i].x != b.v[i].x) return a.v[i].x < b.v[i].x;
            if (a.v[i].y != b.v[i].y) return a.v[i].y < b.v[i].y;
        }
        return false;
    };
    std::sort(tris.begin(), tris.end(), tri_less);
    return union_range(tris);
}

PolygonSet boolean_op(const PolygonSet& a, const PolygonSet& b, BoolOp op) {
    std::vector<detail::WSeg> segs;
    for (const PolygonWithHoles& p : a.polygons()) {
        ring_segments(p.outer, false, segs);
        for (const Ring& h : p.holes) ring_segments(h, false, segs);
    }
    for (const PolygonWithHoles& p : b.polygons()) {
        ring_segments(p.outer, true, segs);
        for (const Ring& h : p.holes) ring_segments(h, true, segs);
    }
    if (segs.empty()) return PolygonSet();
    detail::Overlay ov = detail::build_overlay(std::move(segs));
    switch (op) {
        case BoolOp::Union: return select(ov, pred_union);
        case BoolOp::Intersection: return select(ov, pred_inter);
        case BoolOp::Difference: return select(ov, pred_diff);
        case BoolOp::SymmetricDifference: return select(ov, pred_xor);
    }
    throw invalid_input("boolean_op: unknown operation");
}

PolygonSet PolygonSet::from_rings(const std::vector<std::vector<Ring>>& polygons) {
    std::vector<detail::WSeg> segs;
    for (const std::vector<Ring>& poly : polygons) {
        for (std::size_t ri = 0; ri < poly.size(); ++ri) {
            Ring r = poly[ri];
            if (r.size() >= 2 && r.front() == r.back()) r.pop_back();  // accept closed input
            if (r.size() < 3) continue;
            std::vector<IVec> ir;
            ir.reserve(r.size());
            for (const Point2& p : r) ir.push_back(snap(p));
            i128 a2 = detail::ring_doubled_area_i(ir);
            if (a2 == 0) continue;
            bool want_ccw = (ri == 0);
            if ((a2 > 0) != want_ccw) std::reverse(r.begin(), r.end());
            ring_segments(r, false, segs);
        }
    }
    if (segs.empty()) return PolygonSet();
    detail::Overlay ov = detail::build_overlay(std::move(segs));
    return select(ov, pred_a);
}

double area(const PolygonSet& s) {
    i128 sum = 0;
    auto ring_area2 = [](const Ring& r) {
        std::vector<IVec> ir;
        ir.reserve(r.size());
        for (const Point2& p : r) ir.push_back(snap(p));
        return detail::ring_doubled_area_i(ir);
    };
    for (const PolygonWithHoles& p : s.polygons()) {
        sum += ring_area2(p.outer);          // counter-clockwise: positive
        for (const Ring& h : p.holes) sum += ring_area2(h);  // clockwise: negative
    }
    double a = detail::i128_to_double(sum) / (2.0 * double(kScale) * double(kScale));
    return a < 0 ? 0.0 : a;
}

BBox bounding_box(std::span<const Point2> points) {
    if (points.empty()) throw invalid_input("bounding_box: empty point set");
    BBox b;
    b.x_min = b.x_max = points[0].x;
    b.y_min = b.y_max = points[0].y;
    for (const Point2& p : points) {
        b.x_min = std::min(b.x_min, p.x);
        b.x_max = std::max(b.x_max, p.x);
        b.y_min = std::min(b.y_min, p.y);
        b.y_max = std::max(b.y_max, p.y);
    }
    return b;
}

}  // namespace ripsym
