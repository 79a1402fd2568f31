#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ripsym/geometry.hpp"

namespace ripsym {

/// Simplex of a filtration: dim+1 leading entries of `v` are vertex ids.
struct FiltrationSimplex {
    std::array<std::uint32_t, 3> v{0, 0, 0};
    int dim = 0;
    double weight = 0.0;
};

/// Simplices sorted by (weight, dimension, vertex tuple), so every face
/// precedes its cofaces.
struct Filtration {
    std::vector<FiltrationSimplex> simplices;
};

struct PersistenceInterval {
    int dim = 0;
    double birth = 0.0;
    double death = std::numeric_limits<double>::infinity();
    std::int64_t birth_index = -1;  // filtration position of the creator
    std::int64_t death_index = -1;  // filtration position of the destroyer, -1 if none

    bool infinite() const { return death == std::numeric_limits<double>::infinity(); }
    bool zero_length() const { return birth == death; }
};

/// Persistence intervals in dimensions 0 and 1, sorted by
/// (dim, birth, death).
struct Barcode {
    std::vector<PersistenceInterval> intervals;
};

/// Vertices at weight 0, edges at their length (<= epsilon_max), triangles
/// at their longest edge.
Filtration build_filtration(std::span<const Point2> points, double epsilon_max);

/// Boundary-matrix reduction over GF(2) with the twist (clearing)
/// optimization: triangle columns first, surviving edge columns second.
/// Zero-length intervals are kept; query zero_length() to skip them.
Barcode compute_barcode(const Filtration& f);

/// Betti numbers (b0, b1) at scale epsilon: intervals with
/// birth <= epsilon < death.
std::pair<int, int> betti_at(const Barcode& b, double epsilon);

}  // namespace ripsym
