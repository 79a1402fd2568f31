#include "overlay.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>
#include <vector>

namespace ripsym::detail {

namespace {

inline i128 cross_d(const IVec& d1, const IVec& d2) {
    return i128(d1.x) * d2.y - i128(d1.y) * d2.x;
}

inline i128 orient_i(const IVec& a, const IVec& b, const IVec& c) {
    return i128(b.x - a.x) * (c.y - a.y) - i128(b.y - a.y) * (c.x - a.x);
}

inline int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Nearest integer of num/den for den > 0, ties rounded up.
i64 round_div(i128 num, i128 den) {
    i128 q = num / den;
    i128 r = num % den;
    if (r < 0) {
        q -= 1;
        r += den;
    }
    if (2 * r >= den) q += 1;
    return i64(q);
}

bool seg_key_less(const WSeg& s, const WSeg& t) {
    if (s.a.x != t.a.x) return s.a.x < t.a.x;
    if (s.a.y != t.a.y) return s.a.y < t.a.y;
    if (s.b.x != t.b.x) return s.b.x < t.b.x;
    return s.b.y < t.b.y;
}

// Canonicalize, sort and accumulate coincident segments; drops zero weights.
void fold_segments(std::vector<WSeg>& segs) {
    for (WSeg& s : segs) {
        if (!lex_less(s.a, s.b)) {
            std::swap(s.a, s.b);
            s.wa = -s.wa;
            s.wb = -s.wb;
        }
    }
    std::sort(segs.begin(), segs.end(), seg_key_less);
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < segs.size()) {
        WSeg acc = segs[i];
        std::size_t j = i + 1;
        while (j < segs.size() && segs[j].a == acc.a && segs[j].b == acc.b) {
            acc.wa += segs[j].wa;
            acc.wb += segs[j].wb;
            ++j;
        }
        if ((acc.wa != 0 || acc.wb != 0) && !(acc.a == acc.b)) segs[out++] = acc;
        i = j;
    }
    segs.resize(out);
}

// Uniform grid in CSR form over segment extents.
class SegGrid {
public:
    explicit SegGrid(const std::vector<WSeg>& segs) : segs_(segs) {
        i128 total = 0;
        for (const WSeg& s : segs) total += std::max(std::llabs(s.b.x - s.a.x), std::llabs(s.b.y - s.a.y));
        i64 avg = segs.empty() ? 1 : i64(total / i128(segs.size()));
        cell_ = std::max<i64>(avg * 2, 1024);

        std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
        entries.reserve(segs.size() * 2);
        for (std::uint32_t id = 0; id < segs.size(); ++id) visit_cells(segs[id], [&](std::uint64_t key) {
            entries.emplace_back(key, id);
        });
        std::sort(entries.begin(), entries.end());
        keys_.reserve(entries.size() / 2);
        offsets_.push_back(0);
        ids_.reserve(entries.size());
        for (std::size_t i = 0; i < entries.size();) {
            std::uint64_t key = entries[i].first;
            keys_.push_back(key);
            while (i < entries.size() && entries[i].first == key) ids_.push_back(entries[i++].second);
            offsets_.push_back(std::uint32_t(ids_.size()));
        }
    }

    i64 cell() const { return cell_; }

    std::size_t bucket_count() const { return keys_.size(); }

    std::pair<const std::uint32_t*, const std::uint32_t*> bucket(std::size_t b) const {
        return {ids_.data() + offsets_[b], ids_.data() + offsets_[b + 1]};
    }

    template <class F>
    void for_box(i64 x0, i64 x1, i64 y0, i64 y1, F&& f) const {
        for (i64 cx = fl(x0); cx <= fl(x1); ++cx)
            for (i64 cy = fl(y0); cy <= fl(y1); ++cy) {
                auto it = std::lower_bound(keys_.begin(), keys_.end(), key(cx, cy));
                if (it == keys_.end() || *it != key(cx, cy)) continue;
                std::size_t b = std::size_t(it - keys_.begin());
                for (std::uint32_t i = offsets_[b]; i < offsets_[b + 1]; ++i) f(ids_[i]);
            }
    }

private:
    i64 fl(i64 v) const {
        i64 q = v / cell_;
        if (v % cell_ < 0) --q;
        return q;
    }

    static std::uint64_t key(i64 cx, i64 cy) {
        return (std::uint64_t(std::uint32_t(cx)) << 32) | std::uint64_t(std::uint32_t(cy));
    }

    template <class F>
    void visit_cells(const WSeg& s, F&& f) const {
        i64 ax = s.a.x, bx = s.b.x;
        for (i64 cx = fl(ax); cx <= fl(bx); ++cx) {
            i64 ylo, yhi;
            if (s.a.x == s.b.x) {
                ylo = std::min(s.a.y, s.b.y);
                yhi = std::max(s.a.y, s.b.y);
            } else {
                i64 xlo = std::max(ax, cx * cell_);
                i64 xhi = std::min(bx, cx * cell_ + cell_ - 1);
                i128 dy = s.b.y - s.a.y;
                i64 dx = s.b.x - s.a.x;
                auto yat = [&](i64 x) { return i128(s.a.y) * dx + dy * (x - s.a.x); };
                i128 y1 = yat(xlo), y2 = yat(xhi);
                if (y1 > y2) std::swap(y1, y2);
                ylo = i64(y1 / dx) - 2;
                yhi = i64(y2 / dx) + 2;
            }
            for (i64 cy = fl(ylo); cy <= fl(yhi); ++cy) f(key(cx, cy));
        }
    }

    const std::vector<WSeg>& segs_;
    i64 cell_ = 1;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> ids_;
};

// Does the closed segment meet the closed unit square centered at h?
// Doubled coordinates keep the square corners integral.
bool seg_hits_pixel(const IVec& a, const IVec& b, const IVec& h) {
    i64 ax = 2 * a.x, ay = 2 * a.y, bx = 2 * b.x, by = 2 * b.y;
    i64 x0 = 2 * h.x - 1, x1 = 2 * h.x + 1;
    i64 y0 = 2 * h.y - 1, y1 = 2 * h.y + 1;
    if (std::max(ax, bx) < x0 || std::min(ax, bx) > x1) return false;
    if (std::max(ay, by) < y0 || std::min(ay, by) > y1) return false;
    auto inside = [&](i64 px, i64 py) { return px >= x0 && px <= x1 && py >= y0 && py <= y1; };
    if (inside(ax, ay) || inside(bx, by)) return true;
    i128 dx = bx - ax, dy = by - ay;
    auto side = [&](i64 cx, i64 cy) { return sgn(dx * (cy - ay) - dy * (cx - ax)); };
    int s1 = side(x0, y0), s2 = side(x0, y1), s3 = side(x1, y0), s4 = side(x1, y1);
    if (s1 > 0 && s2 > 0 && s3 > 0 && s4 > 0) return false;
    if (s1 < 0 && s2 < 0 && s3 < 0 && s4 < 0) return false;
    // separating-axis test: box axes and segment normal all overlap
    return true;
}

// Proper crossing (interiors meet in one point) -> rounded intersection.
std::optional<IVec> proper_crossing(const WSeg& s, const WSeg& t) {
    i128 d1 = orient_i(s.a, s.b, t.a);
    i128 d2 = orient_i(s.a, s.b, t.b);
    if ((d1 > 0 && d2 > 0) || (d1 < 0 && d2 < 0) || (d1 == 0 && d2 == 0)) return std::nullopt;
    i128 d3 = orient_i(t.a, t.b, s.a);
    i128 d4 = orient_i(t.a, t.b, s.b);
    if ((d3 > 0 && d4 > 0) || (d3 < 0 && d4 < 0)) return std::nullopt;
    if (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0) return std::nullopt;  // endpoint touch
    i128 num = d3, den = d3 - d4;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    IVec p;
    p.x = round_div(i128(s.a.x) * den + num * (s.b.x - s.a.x), den);
    p.y = round_div(i128(s.a.y) * den + num * (s.b.y - s.a.y), den);
    return p;
}

struct SweepEdge {
    IVec a, b;  // lex-increasing in the sweep frame, never vertical here
    i64 dwa = 0, dwb = 0;
    int orig = -1;
};

// Strict "u runs below v" for coexisting non-crossing edges.
struct BelowCmp {
    const std::vector<SweepEdge>* e;

    bool operator()(int ui, int vi) const {
        if (ui == vi) return false;
        const SweepEdge& u = (*e)[ui];
        const SweepEdge& v = (*e)[vi];
        if (u.a == v.a) {
            i128 s = orient_i(u.a, u.b, v.b);
            if (s != 0) return s > 0;
            return ui < vi;
        }
        if (u.a.x < v.a.x) {
            i128 s = orient_i(u.a, u.b, v.a);
            if (s != 0) return s > 0;
            s = orient_i(u.a, u.b, v.b);
            if (s != 0) return s > 0;
            return ui < vi;
        }
        if (u.a.x > v.a.x) {
            i128 s = orient_i(v.a, v.b, u.a);
            if (s != 0) return s < 0;
            s = orient_i(v.a, v.b, u.b);
            if (s != 0) return s < 0;
            return ui < vi;
        }
        if (u.a.y != v.a.y) return u.a.y < v.a.y;
        return ui < vi;
    }
};

// Left-to-right sweep labeling each edge with the winding numbers of the
// face directly below it. Requires a crossing-free edge set.
void sweep_label(std::vector<SweepEdge>& edges, std::vector<LEdge>& out, bool write_left_of_vertical) {
    struct Ev {
        i64 x;
        i64 y;
        int kind;  // 0 = remove, 1 = insert
        int id;
    };
    std::vector<Ev> evs;
    evs.reserve(edges.size() * 2);
    for (int i = 0; i < int(edges.size()); ++i) {
        evs.push_back(Ev{edges[i].a.x, edges[i].a.y, 1, i});
        evs.push_back(Ev{edges[i].b.x, edges[i].b.y, 0, i});
    }
    // Insertions at equal x run bottom-to-top so each edge finds all its
    // lower neighbors in the status when it reads the winding beneath it.
    BelowCmp order{&edges};
    std::sort(evs.begin(), evs.end(), [&](const Ev& p, const Ev& q) {
        if (p.x != q.x) return p.x < q.x;
        if (p.kind != q.kind) return p.kind < q.kind;
        if (p.kind == 1) return order(p.id, q.id);
        if (p.y != q.y) return p.y < q.y;
        return p.id < q.id;
    });

    std::set<int, BelowCmp> status(order);
    std::vector<std::set<int, BelowCmp>::iterator> pos(edges.size());
    std::vector<std::pair<i64, i64>> below(edges.size(), {0, 0});

    for (const Ev& ev : evs) {
        if (ev.kind == 0) {
            status.erase(pos[ev.id]);
            continue;
        }
        auto [it, ok] = status.insert(ev.id);
        assert(ok);
        pos[ev.id] = it;
        if (it == status.begin()) {
            below[ev.id] = {0, 0};
        } else {
            auto p = std::prev(it);
            const SweepEdge& pe = edges[*p];
            below[ev.id] = {below[*p].first + pe.dwa, below[*p].second + pe.dwb};
        }
    }

    for (int i = 0; i < int(edges.size()); ++i) {
        int o = edges[i].orig;
        if (o < 0) continue;
        if (write_left_of_vertical != out[o].vertical) continue;
        out[o].below_a = below[i].first;
        out[o].below_b = below[i].second;
    }
}

}  // namespace

double i128_to_double(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    double d = double(std::uint64_t(u >> 64)) * 18446744073709551616.0 + double(std::uint64_t(u));
    return neg ? -d : d;
}

Overlay build_overlay(std::vector<WSeg> segs) {
    Overlay ov;
    fold_segments(segs);
    if (segs.empty()) return ov;

    SegGrid grid(segs);

    // hot pixels: every endpoint plus every rounded proper crossing
    std::vector<IVec> hot;
    hot.reserve(segs.size() * 3);
    for (const WSeg& s : segs) {
        hot.push_back(s.a);
        hot.push_back(s.b);
    }
    for (std::size_t b = 0; b < grid.bucket_count(); ++b) {
        auto [first, last] = grid.bucket(b);
        for (const std::uint32_t* p = first; p != last; ++p)
            for (const std::uint32_t* q = p + 1; q != last; ++q) {
                const WSeg& s = segs[*p];
                const WSeg& t = segs[*q];
                if (s.a.x > t.b.x || t.a.x > s.b.x) continue;
                if (std::max(s.a.y, s.b.y) < std::min(t.a.y, t.b.y)) continue;
                if (std::max(t.a.y, t.b.y) < std::min(s.a.y, s.b.y)) continue;
                if (auto c = proper_crossing(s, t)) hot.push_back(*c);
            }
    }
    std::sort(hot.begin(), hot.end(), lex_less);
    hot.erase(std::unique(hot.begin(), hot.end()), hot.end());

    // subdivide every segment at every hot pixel it meets
    std::vector<std::pair<std::uint32_t, IVec>> cut_pairs;
    {
        std::vector<std::uint32_t> stamp(segs.size(), 0);
        std::uint32_t gen = 0;
        for (const IVec& h : hot) {
            ++gen;
            grid.for_box(h.x - 1, h.x + 1, h.y - 1, h.y + 1, [&](std::uint32_t id) {
                if (stamp[id] == gen) return;
                stamp[id] = gen;
                const WSeg& s = segs[id];
                if (h == s.a || h == s.b) return;
                if (seg_hits_pixel(s.a, s.b, h)) cut_pairs.emplace_back(id, h);
            });
        }
    }
    std::sort(cut_pairs.begin(), cut_pairs.end(), [&](const auto& p, const auto& q) {
        if (p.first != q.first) return p.first < q.first;
        const WSeg& s = segs[p.first];
        IVec dir{s.b.x - s.a.x, s.b.y - s.a.y};
        i128 dp = i128(p.second.x - s.a.x) * dir.x + i128(p.second.y - s.a.y) * dir.y;
        i128 dq = i128(q.second.x - s.a.x) * dir.x + i128(q.second.y - s.a.y) * dir.y;
        if (dp != dq) return dp < dq;
        return lex_less(p.second, q.second);
    });

    std::vector<WSeg> pieces;
    pieces.reserve(segs.size() + cut_pairs.size() * 2);
    {
        std::size_t ci = 0;
        for (std::uint32_t id = 0; id < segs.size(); ++id) {
            const WSeg& s = segs[id];
            IVec prev = s.a;
            while (ci < cut_pairs.size() && cut_pairs[ci].first == id) {
                const IVec& c = cut_pairs[ci].second;
                ++ci;
                if (c == prev) continue;
                pieces.push_back(WSeg{prev, c, s.wa, s.wb});
                prev = c;
            }
            if (!(prev == s.b)) pieces.push_back(WSeg{prev, s.b, s.wa, s.wb});
        }
    }
    fold_segments(pieces);

    ov.edges.reserve(pieces.size());
    for (const WSeg& s : pieces) {
        LEdge e;
        e.a = s.a;
        e.b = s.b;
        e.dwa = s.wa;
        e.dwb = s.wb;
        e.vertical = (s.a.x == s.b.x);
        ov.edges.push_back(e);
    }

    // primary sweep: winding below every non-vertical edge
    {
        std::vector<SweepEdge> se;
        se.reserve(ov.edges.size());
        for (int i = 0; i < int(ov.edges.size()); ++i) {
            const LEdge& e = ov.edges[i];
            if (e.vertical) continue;
            se.push_back(SweepEdge{e.a, e.b, e.dwa, e.dwb, i});
        }
        sweep_label(se, ov.edges, false);
    }

    // transposed sweep: winding left of every vertical edge. Transposition
    // mirrors the plane, so winding deltas flip sign before
    // re-canonicalization.
    bool any_vertical = false;
    for (const LEdge& e : ov.edges) any_vertical |= e.vertical;
    if (any_vertical) {
        std::vector<SweepEdge> se;
        se.reserve(ov.edges.size());
        for (int i = 0; i < int(ov.edges.size()); ++i) {
            const LEdge& e = ov.edges[i];
            if (e.a.y == e.b.y) continue;  // horizontal: vertical in the transposed frame
            SweepEdge t;
            t.a = IVec{e.a.y, e.a.x};
            t.b = IVec{e.b.y, e.b.x};
            t.dwa = -e.dwa;
            t.dwb = -e.dwb;
            if (!lex_less(t.a, t.b)) {
                std::swap(t.a, t.b);
                t.dwa = -t.dwa;
                t.dwb = -t.dwb;
            }
            t.orig = i;
            se.push_back(t);
        }
        sweep_label(se, ov.edges, true);
    }

    return ov;
}

i128 doubled_area(const Overlay& ov, FacePredicate pred) {
    i128 sum = 0;
    for (const LEdge& e : ov.edges) {
        if (e.vertical) continue;
        bool in_below = pred(e.below_a, e.below_b);
        bool in_above = pred(e.below_a + e.dwa, e.below_b + e.dwb);
        if (in_below == in_above) continue;
        i128 term = i128(e.b.x - e.a.x) * (e.a.y + e.b.y);
        sum += in_below ? term : -term;
    }
    return sum;
}

i128 ring_doubled_area_i(const std::vector<IVec>& ring) {
    i128 sum = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const IVec& p = ring[i];
        const IVec& q = ring[(i + 1) % ring.size()];
        sum += i128(p.x) * q.y - i128(p.y) * q.x;
    }
    return sum;
}

int point_in_ring_doubled(i64 px2, i64 py2, const std::vector<IVec>& ring) {
    // even-odd crossings of the ray towards +x, doubled coordinates
    bool in = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        i64 ax = 2 * ring[i].x, ay = 2 * ring[i].y;
        i64 bx = 2 * ring[(i + 1) % ring.size()].x, by = 2 * ring[(i + 1) % ring.size()].y;
        if (ay == by) {
            if (py2 == ay && px2 >= std::min(ax, bx) && px2 <= std::max(ax, bx)) return 0;
            continue;
        }
        if ((ay > py2) == (by > py2)) continue;
        i128 lhs = i128(px2 - ax) * (by - ay);
        i128 rhs = i128(py2 - ay) * (bx - ax);
        int s = by > ay ? 1 : -1;
        i128 diff = (lhs - rhs) * s;
        if (diff == 0) return 0;
        if (diff < 0) in = !in;
    }
    return in ? 1 : -1;
}

std::vector<std::vector<IVec>> extract_rings(const Overlay& ov, FacePredicate pred) {
    struct DirEdge {
        IVec from, to;
        int succ = -1;
        bool used = false;
    };
    std::vector<DirEdge> des;
    des.reserve(ov.edges.size() / 4);
    for (const LEdge& e : ov.edges) {
        bool in_one, in_two;  // above/below, or left/right for verticals
        if (e.vertical) {
            in_one = pred(e.below_a, e.below_b);                  // left
            in_two = pred(e.below_a - e.dwa, e.below_b - e.dwb);  // right
            if (in_one == in_two) continue;
            if (in_one) des.push_back(DirEdge{e.a, e.b});  // upward, interior left
            else des.push_back(DirEdge{e.b, e.a});
        } else {
            in_one = pred(e.below_a + e.dwa, e.below_b + e.dwb);  // above
            in_two = pred(e.below_a, e.below_b);                  // below
            if (in_one == in_two) continue;
            if (in_one) des.push_back(DirEdge{e.a, e.b});  // interior above-left
            else des.push_back(DirEdge{e.b, e.a});
        }
    }

    // group outgoing edges per node, sorted counter-clockwise by direction
    std::vector<std::uint32_t> by_from(des.size());
    for (std::uint32_t i = 0; i < des.size(); ++i) by_from[i] = i;
    auto node_less = [&](std::uint32_t i, std::uint32_t j) { return lex_less(des[i].from, des[j].from); };
    std::sort(by_from.begin(), by_from.end(), [&](std::uint32_t i, std::uint32_t j) {
        if (!(des[i].from == des[j].from)) return node_less(i, j);
        return false;
    });
    // node -> contiguous range in by_from
    std::vector<std::uint32_t> node_start;
    for (std::uint32_t i = 0; i < by_from.size(); ++i)
        if (i == 0 || !(des[by_from[i]].from == des[by_from[i - 1]].from)) node_start.push_back(i);
    node_start.push_back(std::uint32_t(by_from.size()));

    auto dir_of = [&](std::uint32_t i) {
        return IVec{des[i].to.x - des[i].from.x, des[i].to.y - des[i].from.y};
    };
    auto angle_less = [&](const IVec& d1, const IVec& d2) {
        int h1 = (d1.y < 0 || (d1.y == 0 && d1.x < 0)) ? 1 : 0;
        int h2 = (d2.y < 0 || (d2.y == 0 && d2.x < 0)) ? 1 : 0;
        if (h1 != h2) return h1 < h2;
        return cross_d(d1, d2) > 0;
    };
    std::vector<std::uint32_t> outdeg(des.size(), 0);  // per edge: out-degree of its from-node
    for (std::size_t n = 0; n + 1 < node_start.size(); ++n) {
        auto beg = by_from.begin() + node_start[n];
        auto end = by_from.begin() + node_start[n + 1];
        std::sort(beg, end, [&](std::uint32_t i, std::uint32_t j) { return angle_less(dir_of(i), dir_of(j)); });
        for (auto it = beg; it != end; ++it) outdeg[*it] = std::uint32_t(end - beg);
    }

    // successor: first outgoing edge clockwise from the reversed incoming one
    auto find_node = [&](const IVec& p) -> std::pair<std::uint32_t, std::uint32_t> {
        std::uint32_t lo = 0, hi = std::uint32_t(node_start.size() - 1);
        while (lo < hi) {
            std::uint32_t mid = (lo + hi) / 2;
            if (lex_less(des[by_from[node_start[mid]]].from, p)) lo = mid + 1;
            else hi = mid;
        }
        return {node_start[lo], node_start[lo + 1]};
    };
    for (std::uint32_t i = 0; i < des.size(); ++i) {
        auto [beg, end] = find_node(des[i].to);
        assert(beg < end && des[by_from[beg]].from == des[i].to);
        IVec rev{des[i].from.x - des[i].to.x, des[i].from.y - des[i].to.y};
        std::uint32_t lo = beg, hi = end;
        while (lo < hi) {
            std::uint32_t mid = (lo + hi) / 2;
            if (angle_less(dir_of(by_from[mid]), rev)) lo = mid + 1;
            else hi = mid;
        }
        des[i].succ = int(by_from[lo == beg ? end - 1 : lo - 1]);
    }

    std::vector<std::vector<IVec>> rings;
    std::vector<IVec> ring;
    for (std::uint32_t i = 0; i < des.size(); ++i) {
        if (des[i].used) continue;
        ring.clear();
        std::vector<std::uint32_t> degs;
        std::uint32_t cur = i;
        while (!des[cur].used) {
            des[cur].used = true;
            ring.push_back(des[cur].from);
            degs.push_back(outdeg[cur]);
            cur = std::uint32_t(des[cur].succ);
        }
        // drop collinear pass-through vertices at plain degree-one nodes
        std::vector<IVec> slim;
        slim.reserve(ring.size());
        std::size_t n = ring.size();
        for (std::size_t j = 0; j < n; ++j) {
            const IVec& p = ring[(j + n - 1) % n];
            const IVec& q = ring[j];
            const IVec& r = ring[(j + 1) % n];
            if (degs[j] == 1 && orient_i(p, q, r) == 0) continue;
            slim.push_back(q);
        }
        if (slim.size() >= 3) rings.push_back(std::move(slim));
    }
    return rings;
}

bool verify_planar(const Overlay& ov) {
    const auto& es = ov.edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            WSeg s{es[i].a, es[i].b, 0, 0};
            WSeg t{es[j].a, es[j].b, 0, 0};
            if (proper_crossing(s, t)) return false;
            // no endpoint strictly inside another edge
            for (const IVec& p : {t.a, t.b}) {
                if (p == s.a || p == s.b) continue;
                if (orient_i(s.a, s.b, p) != 0) continue;
                if (i128(p.x - s.a.x) * (s.b.x - s.a.x) + i128(p.y - s.a.y) * (s.b.y - s.a.y) > 0 &&
                    i128(p.x - s.b.x) * (s.a.x - s.b.x) + i128(p.y - s.b.y) * (s.a.y - s.b.y) > 0)
                    return false;
            }
            for (const IVec& p : {s.a, s.b}) {
                if (p == t.a || p == t.b) continue;
                if (orient_i(t.a, t.b, p) != 0) continue;
                if (i128(p.x - t.a.x) * (t.b.x - t.a.x) + i128(p.y - t.a.y) * (t.b.y - t.a.y) > 0 &&
                    i128(p.x - t.b.x) * (t.a.x - t.b.x) + i128(p.y - t.b.y) * (t.a.y - t.b.y) > 0)
                    return false;
            }
        }
    return true;
}

}  // namespace ripsym::detail
