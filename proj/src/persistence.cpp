#include "ripsym/persistence.hpp"

#include <algorithm>
#include <unordered_map>

#include "ripsym/complex.hpp"

namespace ripsym {

namespace {

bool simplex_less(const FiltrationSimplex& a, const FiltrationSimplex& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.dim != b.dim) return a.dim < b.dim;
    for (int i = 0; i <= a.dim; ++i)
        if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
    return false;
}

// GF(2) column: sorted row indices; xor-merge b into a.
void xor_into(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
              std::vector<std::uint32_t>& buf) {
    buf.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(buf));
    a.swap(buf);
}

}  // namespace

Filtration build_filtration(std::span<const Point2> points, double epsilon_max) {
    if (!(epsilon_max > 0.0)) throw invalid_input("build_filtration: epsilon_max must be positive");
    if (points.size() < 2) throw invalid_input("build_filtration: need at least 2 points");

    NeighborhoodGraph g = build_neighborhood_graph(points, epsilon_max);
    RipsComplex rc = rips_expansion(g);

    Filtration f;
    f.simplices.reserve(points.size() + g.edges.size() + rc.triangles.size());
    for (std::uint32_t i = 0; i < points.size(); ++i)
        f.simplices.push_back(FiltrationSimplex{{i, 0, 0}, 0, 0.0});
    for (const GraphEdge& e : g.edges)
        f.simplices.push_back(FiltrationSimplex{{e.i, e.j, 0}, 1, e.w});
    for (const GraphTriangle& t : rc.triangles)
        f.simplices.push_back(FiltrationSimplex{{t.i, t.j, t.k}, 2, t.w});
    std::sort(f.simplices.begin(), f.simplices.end(), simplex_less);
    return f;
}

Barcode compute_barcode(const Filtration& f) {
    const std::size_t m = f.simplices.size();
    constexpr std::uint32_t kNone = 0xffffffffu;

    // filtration positions of vertices and edges, for boundary lookups
    std::unordered_map<std::uint64_t, std::uint32_t> edge_pos;
    std::vector<std::uint32_t> vertex_pos;
    for (std::uint32_t idx = 0; idx < m; ++idx) {
        const FiltrationSimplex& s = f.simplices[idx];
        if (s.dim == 0) {
            if (s.v[0] >= vertex_pos.size()) vertex_pos.resize(s.v[0] + 1, kNone);
            vertex_pos[s.v[0]] = idx;
        } else if (s.dim == 1) {
            edge_pos[(std::uint64_t(s.v[0]) << 32) | s.v[1]] = idx;
        }
    }

    std::vector<std::uint32_t> pivot(m, kNone);       // row -> column that has it as low
    std::vector<std::vector<std::uint32_t>> cols(m);  // reduced columns, kept for reuse
    std::vector<bool> cleared(m, false);
    std::vector<std::uint32_t> buf;

    Barcode bc;

    auto reduce_column = [&](std::uint32_t idx, std::vector<std::uint32_t> col) -> bool {
        // returns true if the column became zero (idx creates a class)
        while (!col.empty()) {
            std::uint32_t low = col.back();
            std::uint32_t other = pivot[low];
            if (other == kNone) {
                pivot[low] = idx;
                cols[idx] = std::move(col);
                return false;
            }
            xor_into(col, cols[other], buf);
        }
        return true;
    };

    // twist order: triangles first; every pairing clears its edge
    for (std::uint32_t idx = 0; idx < m; ++idx) {
        const FiltrationSimplex& s = f.simplices[idx];
        if (s.dim != 2) continue;
        std::vector<std::uint32_t> col{
            edge_pos.at((std::uint64_t(s.v[0]) << 32) | s.v[1]),
            edge_pos.at((std::uint64_t(s.v[0]) << 32) | s.v[2]),
            edge_pos.at((std::uint64_t(s.v[1]) << 32) | s.v[2]),
        };
        std::sort(col.begin(), col.end());
        if (!reduce_column(idx, std::move(col))) {
            std::uint32_t e = cols[idx].back();
            cleared[e] = true;
            bc.intervals.push_back(PersistenceInterval{1, f.simplices[e].weight, s.weight,
                                                       std::int64_t(e), std::int64_t(idx)});
        }
        // a zero triangle column would create a (truncated) 2-cycle; not reported
    }

    for (std::uint32_t idx = 0; idx < m; ++idx) {
        const FiltrationSimplex& s = f.simplices[idx];
        if (s.dim != 1 || cleared[idx]) continue;
        std::vector<std::uint32_t> col{vertex_pos[s.v[0]], vertex_pos[s.v[1]]};
        std::sort(col.begin(), col.end());
        if (reduce_column(idx, std::move(col))) {
            // cycle never filled by a triangle within the filtration
            bc.intervals.push_back(PersistenceInterval{1, s.weight,
                                                       std::numeric_limits<double>::infinity(),
                                                       std::int64_t(idx), -1});
        } else {
            std::uint32_t v = cols[idx].back();
            bc.intervals.push_back(
                PersistenceInterval{0, 0.0, s.weight, std::int64_t(v), std::int64_t(idx)});
        }
    }

    // unpaired vertices: one infinite component bar each
    for (std::uint32_t idx = 0; idx < m; ++idx) {
        if (f.simplices[idx].dim != 0) continue;
        if (pivot[idx] == kNone)
            bc.intervals.push_back(PersistenceInterval{0, 0.0, std::numeric_limits<double>::infinity(),
                                                       std::int64_t(idx), -1});
    }

    std::sort(bc.intervals.begin(), bc.intervals.end(), [](const auto& a, const auto& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.death != b.death) return a.death < b.death;
        return a.birth_index < b.birth_index;
    });
    return bc;
}

std::pair<int, int> betti_at(const Barcode& b, double epsilon) {
    int b0 = 0, b1 = 0;
    for (const PersistenceInterval& iv : b.intervals) {
        if (iv.birth <= epsilon && epsilon < iv.death) (iv.dim == 0 ? b0 : b1)++;
    }
    return {b0, b1};
}

}  // namespace ripsym
