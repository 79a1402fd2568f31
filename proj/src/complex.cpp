#include "ripsym/complex.hpp"

#include <algorithm>
#include <cmath>

namespace ripsym {

Eigen::MatrixXd pairwise_distances(std::span<const Point2> points) {
    const auto n = static_cast<Eigen::Index>(points.size());
    if (n < 2) throw invalid_input("pairwise_distances: need at least 2 points");
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        d(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double dx = points[i].x - points[j].x;
            double dy = points[i].y - points[j].y;
            double v = std::hypot(dx, dy);
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    return d;
}

NeighborhoodGraph build_neighborhood_graph(std::span<const Point2> points, double epsilon) {
    if (!(epsilon > 0.0)) throw invalid_input("build_neighborhood_graph: epsilon must be positive");
    if (points.size() < 2) throw invalid_input("build_neighborhood_graph: need at least 2 points");
    NeighborhoodGraph g;
    g.vertices.assign(points.begin(), points.end());
    g.epsilon = epsilon;
    const std::uint32_t n = static_cast<std::uint32_t>(points.size());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            double dx = points[i].x - points[j].x;
            double dy = points[i].y - points[j].y;
            double d = std::hypot(dx, dy);
            if (d > 0.0 && d <= epsilon) g.edges.push_back(GraphEdge{i, j, d});
        }
    return g;
}

RipsComplex rips_expansion(const NeighborhoodGraph& graph) {
    RipsComplex c;
    c.graph = graph;
    c.epsilon = graph.epsilon;

    const std::uint32_t n = static_cast<std::uint32_t>(graph.vertices.size());
    // sorted adjacency lists; edge weights looked up per neighbor
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(n);
    for (const GraphEdge& e : graph.edges) {
        adj[e.i].emplace_back(e.j, e.w);
        adj[e.j].emplace_back(e.i, e.w);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    // for each edge (i, j): common neighbors k > j close the clique
    for (const GraphEdge& e : graph.edges) {
        const auto& ai = adj[e.i];
        const auto& aj = adj[e.j];
        auto it1 = std::lower_bound(ai.begin(), ai.end(), std::make_pair(e.j + 1, 0.0));
        auto it2 = std::lower_bound(aj.begin(), aj.end(), std::make_pair(e.j + 1, 0.0));
        while (it1 != ai.end() && it2 != aj.end()) {
            if (it1->first < it2->first) ++it1;
            else if (it2->first < it1->first) ++it2;
            else {
                double w = std::max(e.w, std::max(it1->second, it2->second));
                c.triangles.push_back(GraphTriangle{e.i, e.j, it1->first, w});
                ++it1;
                ++it2;
            }
        }
    }
    return c;
}

double epsilon_from_quantile(std::span<const Point2> points, double q) {
    if (!(q > 0.0 && q < 1.0)) throw invalid_input("epsilon_from_quantile: q must lie in (0, 1)");
    if (points.size() < 2) throw invalid_input("epsilon_from_quantile: need at least 2 points");
    std::vector<double> d;
    d.reserve(points.size() * (points.size() - 1) / 2);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double dx = points[i].x - points[j].x;
            double dy = points[i].y - points[j].y;
            double v = std::hypot(dx, dy);
            if (v > 0.0) d.push_back(v);
        }
    if (d.empty()) throw invalid_input("epsilon_from_quantile: all points coincide");
    std::sort(d.begin(), d.end());
    // type-7 quantile: h = (m - 1) q, linear interpolation between order stats
    double h = double(d.size() - 1) * q;
    std::size_t lo = static_cast<std::size_t>(h);
    double frac = h - double(lo);
    if (lo + 1 >= d.size()) return d.back();
    return d[lo] + frac * (d[lo + 1] - d[lo]);
}

std::vector<Triangle2> realize_triangles(const RipsComplex& complex) {
    std::vector<Triangle2> out;
    out.reserve(complex.triangles.size());
    for (const GraphTriangle& t : complex.triangles) {
        const Point2& a = complex.graph.vertices[t.i];
        const Point2& b = complex.graph.vertices[t.j];
        const Point2& c = complex.graph.vertices[t.k];
        if (orient2d(a, b, c) == 0) continue;  // collinear triple, no area
        out.emplace_back(a, b, c);
    }
    return out;
}

}  // namespace ripsym
