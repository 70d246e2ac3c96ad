#ifndef ZONELAB_VORONOI_HPP
#define ZONELAB_VORONOI_HPP

#include "zonelab/core.hpp"
#include "zonelab/delaunay.hpp"

#include <optional>
#include <vector>

namespace zonelab {

// The Voronoi polytope as inequalities 2 x^T Q v <= v^T Q v, one per
// relevant vector v.
struct HPolytope {
    GramForm form;
    std::vector<IntVector> normals;  // relevant vectors, +- pairs
    // Cached linear rows (a, b) with a = 2 Q v, b = evalForm(v).
    std::vector<std::pair<RatVector, Rat>> rows;
};

struct Face {
    std::size_t dim = 0;
    std::vector<std::size_t> vertexSet;           // sorted vertex indices
    std::vector<std::size_t> activeInequalities;  // sorted facet indices
};

// Graded face lattice of the Voronoi polytope, vertices through the
// polytope itself.
struct FacePoset {
    std::size_t dim = 0;
    std::vector<RatVector> vertices;
    std::vector<std::vector<Face>> faces;  // faces[d] = faces of dimension d
    // children[d][i]: indices into faces[d-1] of the faces covered by
    // faces[d][i].
    std::vector<std::vector<std::vector<std::size_t>>> children;

    // f-vector over dimensions 0..n-1.
    std::vector<std::size_t> fVector() const;
};

// Class of mutually parallel edges.
struct Zone {
    IntVector direction;  // primitive, first nonzero coordinate positive
    std::vector<std::size_t> edgeIds;  // indices into poset.faces[1]
    bool closed = false;
};

HPolytope voronoiPolytope(const GramForm& q);

std::vector<RatVector> enumerateVertices(const HPolytope& p);

FacePoset buildFacePoset(const HPolytope& p);

// Partition of the edges by normalized direction; closed flags filled in.
std::vector<Zone> zones(const FacePoset& poset);

// A zone is closed iff every 2-face contains either two of its edges or
// none. For n = 2 the single 2-face is the polytope itself.
bool classifyZone(const FacePoset& poset, const Zone& z);

// The lamina functional dual to a zone: the primitive integer k parallel
// to Q d where d is the zone direction.
IntVector zoneFunctional(const GramForm& q, const Zone& z);

}  // namespace zonelab

#endif
