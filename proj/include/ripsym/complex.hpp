#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "ripsym/geometry.hpp"

namespace ripsym {

/// Weighted edge of the neighborhood graph, i < j, w = ||p_i - p_j||.
struct GraphEdge {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    double w = 0.0;
};

/// Clique-completed 2-simplex, i < j < k, w = longest edge.
struct GraphTriangle {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    std::uint32_t k = 0;
    double w = 0.0;
};

/// Vertices plus all point pairs within distance epsilon of each other.
/// Coincident points contribute vertices but no zero-length edges.
struct NeighborhoodGraph {
    std::vector<Point2> vertices;
    std::vector<GraphEdge> edges;  // ascending (i, j)
    double epsilon = 0.0;
};

/// Neighborhood graph plus its clique triangles: the 2-skeleton of the
/// Vietoris-Rips complex at scale epsilon.
struct RipsComplex {
    NeighborhoodGraph graph;
    std::vector<GraphTriangle> triangles;  // ascending (i, j, k)
    double epsilon = 0.0;
};

/// Full symmetric distance table with zero diagonal. Requires >= 2 points.
Eigen::MatrixXd pairwise_distances(std::span<const Point2> points);

/// Edge set {(i, j) : 0 < ||p_i - p_j|| <= epsilon}, epsilon > 0.
NeighborhoodGraph build_neighborhood_graph(std::span<const Point2> points, double epsilon);

/// Clique completion: a triangle per 3-clique of the graph, weighted by its
/// longest edge. Deterministic ascending enumeration.
RipsComplex rips_expansion(const NeighborhoodGraph& graph);

/// q-quantile (linear interpolation between order statistics) of the
/// positive pairwise distances; q in (0, 1).
double epsilon_from_quantile(std::span<const Point2> points, double q);

/// Geometric realization of the complex: the planar triangles of its
/// 2-simplices, ready for union_triangles.
std::vector<Triangle2> realize_triangles(const RipsComplex& complex);

}  // namespace ripsym
