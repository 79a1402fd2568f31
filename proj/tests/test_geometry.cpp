#include "ripsym/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "overlay.hpp"
#include "ripsym/rng.hpp"

using namespace ripsym;

namespace {

PolygonSet rect(double x0, double y0, double x1, double y1) {
    return PolygonSet::from_rings({{{Point2(x0, y0), Point2(x1, y0), Point2(x1, y1), Point2(x0, y1)}}});
}

// Test-side membership oracle: plain double arithmetic, no shared code with
// the overlay engine.
bool in_triangle(double px, double py, const Triangle2& t) {
    double s[3];
    for (int i = 0; i < 3; ++i) {
        const Point2& a = t.vertex(i);
        const Point2& b = t.vertex((i + 1) % 3);
        s[i] = (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
    }
    return s[0] >= 0 && s[1] >= 0 && s[2] >= 0;
}

double mc_union_area(const std::vector<Triangle2>& ts, int n_samples, Rng& rng, double* sigma) {
    std::vector<Point2> all;
    for (const auto& t : ts)
        for (int i = 0; i < 3; ++i) all.push_back(t.vertex(i));
    BBox b = bounding_box(all);
    int hits = 0;
    for (int i = 0; i < n_samples; ++i) {
        double px = rng.uniform(b.x_min, b.x_max);
        double py = rng.uniform(b.y_min, b.y_max);
        for (const auto& t : ts)
            if (in_triangle(px, py, t)) {
                ++hits;
                break;
            }
    }
    double p = double(hits) / n_samples;
    *sigma = b.area() * std::sqrt(std::max(p * (1 - p), 1e-12) / n_samples);
    return b.area() * p;
}

std::vector<Triangle2> random_soup(Rng& rng, int n, double lo = 0.0, double hi = 1.0, double max_side = 0.4) {
    std::vector<Triangle2> ts;
    while (int(ts.size()) < n) {
        double ax = rng.uniform(lo, hi), ay = rng.uniform(lo, hi);
        double bx = ax + rng.uniform(-max_side, max_side), by = ay + rng.uniform(-max_side, max_side);
        double cx = ax + rng.uniform(-max_side, max_side), cy = ay + rng.uniform(-max_side, max_side);
        if (orient2d(Point2(ax, ay), Point2(bx, by), Point2(cx, cy)) == 0) continue;
        ts.emplace_back(Point2(ax, ay), Point2(bx, by), Point2(cx, cy));
    }
    return ts;
}

}  // namespace

TEST_CASE("Point2 rejects non-finite coordinates") {
    CHECK_THROWS_AS(Point2(std::nan(""), 0.0), invalid_input);
    CHECK_THROWS_AS(Point2(0.0, std::numeric_limits<double>::infinity()), invalid_input);
}

TEST_CASE("Triangle2 normalizes to counter-clockwise and rejects collinear") {
    Triangle2 t(Point2(0, 0), Point2(0, 1), Point2(1, 0));  // clockwise input
    CHECK(orient2d(t.vertex(0), t.vertex(1), t.vertex(2)) == 1);
    CHECK_THROWS_AS(Triangle2(Point2(0, 0), Point2(1, 1), Point2(2, 2)), invalid_input);
    CHECK_THROWS_AS(Triangle2(Point2(0, 0), Point2(0, 0), Point2(1, 1)), invalid_input);
}

TEST_CASE("triangle_area worked examples") {
    CHECK(triangle_area(Triangle2(Point2(0, 0), Point2(1, 0), Point2(0, 1))) == doctest::Approx(0.5));
    CHECK(triangle_area(Triangle2(Point2(0, 0), Point2(2, 0), Point2(0, 2))) == doctest::Approx(2.0));
    CHECK(triangle_area(Triangle2(Point2(0, 0), Point2(1, 0), Point2(0.5, 1e-9))) ==
          doctest::Approx(5e-10).epsilon(1e-12));
}

TEST_CASE("orient2d is exact on dyadic inputs") {
    Rng rng(7);
    const double scale = 0x1.0p-45;
    for (int iter = 0; iter < 20000; ++iter) {
        // dyadic coordinates m * 2^-45 share a scale, so the reference
        // determinant is exact in 128-bit integers
        std::int64_t m[6];
        for (auto& v : m) v = std::int64_t(rng.next_below(1ull << 40)) - (1ll << 39);
        if (iter % 4 == 0) {
            // force collinear: c = a + k*(b - a) with small integer k
            std::int64_t k = std::int64_t(rng.next_below(5));
            m[4] = m[0] + k * (m[2] - m[0]);
            m[5] = m[1] + k * (m[3] - m[1]);
            if (std::abs(m[4]) >= (1ll << 40) || std::abs(m[5]) >= (1ll << 40)) continue;
        }
        __int128 det = __int128(m[2] - m[0]) * (m[5] - m[1]) - __int128(m[3] - m[1]) * (m[4] - m[0]);
        int expect = det > 0 ? 1 : (det < 0 ? -1 : 0);
        int got = orient2d(Point2(m[0] * scale, m[1] * scale), Point2(m[2] * scale, m[3] * scale),
                           Point2(m[4] * scale, m[5] * scale));
        REQUIRE(got == expect);
    }
}

TEST_CASE("union_triangles worked examples") {
    CHECK(area(union_triangles({})) == 0.0);
    CHECK(union_triangles({}).empty());

    Triangle2 t(Point2(0, 0), Point2(1, 0), Point2(0, 1));
    std::vector<Triangle2> twice{t, t};
    CHECK(area(union_triangles(twice)) == doctest::Approx(0.5).epsilon(1e-12));

    std::vector<Triangle2> square{Triangle2(Point2(0, 0), Point2(1, 0), Point2(1, 1)),
                                  Triangle2(Point2(0, 0), Point2(1, 1), Point2(0, 1))};
    CHECK(area(union_triangles(square)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(union_triangles(square).polygons().size() == 1);
}

TEST_CASE("degenerate-on-grid triangles are skipped with a diagnostic") {
    // vanishes after snapping to the 2^-29 grid
    Triangle2 sliver(Point2(0, 0), Point2(1, 0), Point2(0.5, 1e-12));
    UnionDiagnostics diag;
    PolygonSet s = union_triangles(std::vector<Triangle2>{sliver}, &diag);
    CHECK(s.empty());
    CHECK(diag.degenerate_skipped == 1);
    CHECK(diag.input_triangles == 1);
}

TEST_CASE("boolean_op worked examples") {
    PolygonSet a = rect(0, 0, 1, 1);
    CHECK(area(boolean_op(a, a, BoolOp::SymmetricDifference)) == 0.0);

    PolygonSet b = rect(0.5, 0, 1.5, 1);
    CHECK(area(boolean_op(a, b, BoolOp::SymmetricDifference)) == doctest::Approx(1.0).epsilon(1e-12));

    PolygonSet c = rect(2, 0, 3, 1);
    CHECK(boolean_op(a, c, BoolOp::Intersection).empty());
    CHECK(area(boolean_op(a, c, BoolOp::Union)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(area(boolean_op(a, b, BoolOp::Difference)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("area with holes") {
    PolygonSet sq = rect(0, 0, 1, 1);
    PolygonSet hole = rect(0.25, 0.25, 0.75, 0.75);
    PolygonSet with_hole = boolean_op(sq, hole, BoolOp::Difference);
    CHECK(area(with_hole) == doctest::Approx(0.75).epsilon(1e-12));
    REQUIRE(with_hole.polygons().size() == 1);
    CHECK(with_hole.polygons()[0].holes.size() == 1);

    // hole ring must be clockwise (negative area by the shoelace rule)
    const Ring& h = with_hole.polygons()[0].holes[0];
    double s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point2& p = h[i];
        const Point2& q = h[(i + 1) % h.size()];
        s += p.x * q.y - p.y * q.x;
    }
    CHECK(s < 0);
}

TEST_CASE("bounding_box examples") {
    std::vector<Point2> pts{Point2(0, 0), Point2(1, 2)};
    BBox b = bounding_box(pts);
    CHECK(b.x_min == 0);
    CHECK(b.x_max == 1);
    CHECK(b.y_min == 0);
    CHECK(b.y_max == 2);
    CHECK(b.area() == doctest::Approx(2.0));

    std::vector<Point2> one{Point2(3, 4)};
    CHECK(bounding_box(one).area() == 0.0);
    CHECK_THROWS_AS(bounding_box({}), invalid_input);
}

TEST_CASE("union is order-invariant and exact under permutation") {
    Rng rng(11);
    std::vector<Triangle2> ts = random_soup(rng, 60);
    double a1 = area(union_triangles(ts));
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
        for (std::size_t i = ts.size(); i > 1; --i) std::swap(ts[i - 1], ts[rng.next_below(i)]);
        double a2 = area(union_triangles(ts));
        CHECK(a2 == doctest::Approx(a1).epsilon(1e-12));
    }
}

TEST_CASE("inclusion-exclusion and symmetric-difference identities") {
    Rng rng(13);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<Triangle2> sa = random_soup(rng, 12);
        std::vector<Triangle2> sb = random_soup(rng, 12);
        PolygonSet a = union_triangles(sa);
        PolygonSet b = union_triangles(sb);
        double au = area(boolean_op(a, b, BoolOp::Union));
        double ai = area(boolean_op(a, b, BoolOp::Intersection));
        double ax = area(boolean_op(a, b, BoolOp::SymmetricDifference));
        double aa = area(a), ab = area(b);
        CHECK(au + ai == doctest::Approx(aa + ab).epsilon(1e-9));
        CHECK(ax == doctest::Approx(aa + ab - 2 * ai).epsilon(1e-9));
        CHECK(ai <= std::min(aa, ab) + 1e-12);
        CHECK(au >= std::max(aa, ab) - 1e-12);
        CHECK(ax == doctest::Approx(au - ai).epsilon(1e-9));
    }
}

TEST_CASE("union area matches the Monte Carlo membership oracle") {
    Rng rng(17);
    for (int iter = 0; iter < 8; ++iter) {
        std::vector<Triangle2> ts = random_soup(rng, 40);
        double a = area(union_triangles(ts));
        double sigma = 0;
        double est = mc_union_area(ts, 200000, rng, &sigma);
        CHECK(std::fabs(a - est) <= 3 * sigma);
    }
}

TEST_CASE("overlay stays planar after snap rounding") {
    Rng rng(19);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Triangle2> ts = random_soup(rng, 25);
        std::vector<detail::WSeg> segs;
        for (const auto& t : ts) {
            detail::IVec v[3];
            for (int i = 0; i < 3; ++i)
                v[i] = detail::IVec{std::llround(t.vertex(i).x * double(detail::kScale)),
                                    std::llround(t.vertex(i).y * double(detail::kScale))};
            segs.push_back({v[0], v[1], 1, 0});
            segs.push_back({v[1], v[2], 1, 0});
            segs.push_back({v[2], v[0], 1, 0});
        }
        detail::Overlay ov = detail::build_overlay(std::move(segs));
        CHECK(detail::verify_planar(ov));
    }
}

TEST_CASE("exactly mirrored geometry cancels to an empty symmetric difference") {
    Rng rng(23);
    std::vector<Triangle2> ts = random_soup(rng, 40, 0.0, 1.0, 0.3);
    std::vector<Triangle2> mirrored;
    for (const auto& t : ts) {
        mirrored.push_back(t);
        mirrored.emplace_back(Point2(t.vertex(0).x, 1.0 - t.vertex(0).y),
                              Point2(t.vertex(1).x, 1.0 - t.vertex(1).y),
                              Point2(t.vertex(2).x, 1.0 - t.vertex(2).y));
    }
    PolygonSet v = union_triangles(mirrored);
    std::vector<Triangle2> reflected;
    for (const auto& t : mirrored)
        reflected.emplace_back(Point2(t.vertex(0).x, 1.0 - t.vertex(0).y),
                               Point2(t.vertex(1).x, 1.0 - t.vertex(1).y),
                               Point2(t.vertex(2).x, 1.0 - t.vertex(2).y));
    PolygonSet vr = union_triangles(reflected);
    CHECK(area(boolean_op(v, vr, BoolOp::SymmetricDifference)) == 0.0);
}

TEST_CASE("coordinates beyond the supported range are rejected") {
    Triangle2 big(Point2(0, 0), Point2(2000, 0), Point2(0, 2000));
    CHECK_THROWS_AS(union_triangles(std::vector<Triangle2>{big}), invalid_input);
}

TEST_CASE("corner-touching squares stay separate rings") {
    PolygonSet a = rect(0, 0, 1, 1);
    PolygonSet b = rect(1, 1, 2, 2);
    PolygonSet u = boolean_op(a, b, BoolOp::Union);
    CHECK(area(u) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(u.polygons().size() == 2);
}
