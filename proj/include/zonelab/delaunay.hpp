#ifndef ZONELAB_DELAUNAY_HPP
#define ZONELAB_DELAUNAY_HPP

#include "zonelab/core.hpp"

#include <string>
#include <vector>

namespace zonelab {

// Minimal vectors of one nonzero class of L/2L. minVectors holds one
// representative per +- pair; the coset is simple when there is exactly
// one such pair.
struct CosetRecord {
    IntVector representative;  // coordinates in {0,1}, nonzero
    Rat minNorm;
    std::vector<IntVector> minVectors;
    bool simple = false;
};

// Convex hull of all lattice points on an empty sphere. Vertex list is
// sorted lexicographically; the full co-spherical set is kept, never a
// triangulation of it.
struct DelaunayCell {
    std::vector<IntVector> vertices;
    RatVector center;
    Rat radiusSq;
};

// All Delaunay cells having 0 as a vertex.
struct DelaunayStar {
    std::vector<DelaunayCell> cells;
};

std::vector<CosetRecord> cosetMinima(const GramForm& q);

// Minimal vectors (both signs) of all simple cosets: the facet normals of
// the Voronoi polytope.
std::vector<IntVector> relevantVectors(const GramForm& q);

// Exactly the lattice points z with (z-c)^T Q (z-c) <= r2, by recursive
// coordinate bounds from the LDL^T decomposition of Q.
std::vector<IntVector> enumerateInEllipsoid(const GramForm& q,
                                            const RatVector& c,
                                            const Rat& r2);

// The Delaunay cell whose empty sphere is centered at the Voronoi vertex w
// and passes through 0. Throws when a lattice point lies strictly inside.
DelaunayCell starCellAt(const GramForm& q, const RatVector& w);

DelaunayStar delaunayStar(const GramForm& q);

// Canonical text encoding of a star: cells sorted, each cell its sorted
// vertex list. Equal strings <=> identical subdivisions near 0 in the
// fixed basis.
std::string fingerprint(const DelaunayStar& star);

// Independent reconstruction of the star from all lattice vectors in the
// coordinate box [-boxRadius, boxRadius]^n, bypassing coset minima and
// sphere enumeration. Throws when a cell touches the box boundary.
DelaunayStar liftingOracle(const GramForm& q, Int boxRadius);

// Supporting hyperplane of one facet of a cell: normal . x = offset, with
// the cell on the side normal . x <= offset.
struct CellFacet {
    IntVector normal;  // primitive
    Rat offset;
    std::vector<IntVector> vertices;  // sorted, subset of the cell's
};

std::vector<CellFacet> cellFacets(const DelaunayCell& cell);

}  // namespace zonelab

#endif
