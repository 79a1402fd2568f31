#pragma once

// Exact boolean overlay of weighted segment soups on an integer grid.
//
// All operands are snapped to a fixed grid (2^-29 of a user unit) and every
// predicate below is evaluated in 128-bit integer arithmetic, so there are
// no tolerances anywhere in this engine: coincident, collinear and exactly
// mirrored inputs are handled by construction. Crossings between snapped
// segments are resolved by Guibas-Marimont snap rounding (subdivide every
// segment at every "hot pixel" it passes through), after which the segment
// set is crossing-free, coincident pieces merge by summing winding weights,
// and a pair of plane sweeps labels each surviving edge with the winding
// numbers of the faces on its two sides.

#include <cstdint>
#include <functional>
#include <vector>

namespace ripsym::detail {

using i64 = std::int64_t;
using i128 = __int128;

// 2^29: fine enough that snapping error (half a cell) stays below
// 1e-9 x bounding-box diagonal for unit-scale data, coarse enough that all
// overlay predicates fit i128 for |coordinates| <= 2^39 (1024 user units).
inline constexpr i64 kScale = i64(1) << 29;
inline constexpr i64 kMaxCoord = i64(1) << 39;

struct IVec {
    i64 x = 0;
    i64 y = 0;
    bool operator==(const IVec&) const = default;
};

inline bool lex_less(const IVec& p, const IVec& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
}

// Weighted segment: crossing the segment from the right of a->b to the left
// adds (wa, wb) to the (operand A, operand B) winding numbers.
struct WSeg {
    IVec a, b;
    i64 wa = 0, wb = 0;
};

// Arrangement edge labeled with the winding numbers of its two sides.
// For non-vertical edges `below` is the face under the edge; for vertical
// edges it is the face on the smaller-x side. The face on the other side
// has winding below + dw.
struct LEdge {
    IVec a, b;  // lex-increasing
    i64 dwa = 0, dwb = 0;
    i64 below_a = 0, below_b = 0;
    bool vertical = false;
};

struct Overlay {
    std::vector<LEdge> edges;
};

// Predicate deciding membership of a face from its winding numbers.
using FacePredicate = bool (*)(i64 wa, i64 wb);

// Snap-round, merge and label a segment soup. Segments with a == b are
// ignored; weights of coincident segments accumulate.
Overlay build_overlay(std::vector<WSeg> segs);

// Exact doubled area (in grid^2 units) of the faces selected by pred.
i128 doubled_area(const Overlay& ov, FacePredicate pred);

// Boundary rings of the selected region, interiors on the left: outer rings
// counter-clockwise, hole rings clockwise. Rings are simple and vertex-
// disjoint except possibly at pinch vertices shared between rings.
std::vector<std::vector<IVec>> extract_rings(const Overlay& ov, FacePredicate pred);

// Exact signed doubled area of a closed ring.
i128 ring_doubled_area_i(const std::vector<IVec>& ring);

// Strictly-inside test of a point given in doubled coordinates against a
// ring in normal coordinates: 1 inside, 0 on boundary, -1 outside.
int point_in_ring_doubled(i64 px2, i64 py2, const std::vector<IVec>& ring);

// Test hook: verifies no two edges of the overlay properly cross and that
// no edge passes through another edge's interior vertex. O(n^2).
bool verify_planar(const Overlay& ov);

double i128_to_double(i128 v);

}  // namespace ripsym::detail
