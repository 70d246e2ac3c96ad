#ifndef ZONELAB_DD_HPP
#define ZONELAB_DD_HPP

#include "zonelab/linalg.hpp"

#include <utility>
#include <vector>

namespace zonelab {

// Extreme rays of the pointed polyhedral cone {t : a_i . t >= 0}, by the
// incremental double description method. Rays are returned as primitive
// integer vectors (positive scaling only, direction preserved).
// Throws when the rows do not span (the cone contains a line).
std::vector<IntVector> extremeRaysOfCone(const std::vector<RatVector>& rows);

struct PolytopeVertices {
    std::vector<RatVector> vertices;
    // Per vertex, the sorted indices of inequalities satisfied with equality.
    std::vector<std::vector<std::size_t>> activeSets;
};

// Exact vertex enumeration for {x : a_i . x <= b_i}, assumed bounded with
// nonempty interior; throws on an unbounded direction.
PolytopeVertices enumeratePolytopeVertices(
    const std::vector<std::pair<RatVector, Rat>>& inequalities);

}  // namespace zonelab

#endif
