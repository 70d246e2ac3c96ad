#include "zonelab/delaunay.hpp"
#include "zonelab/voronoi.hpp"

#include <algorithm>

namespace zonelab {

DelaunayStar delaunayStar(const GramForm& q)
{
    // One cell per Voronoi vertex: the vertex is the circumcenter of its
    // dual Delaunay cell and 0 lies on that sphere.
    DelaunayStar star;
    for (const RatVector& w : enumerateVertices(voronoiPolytope(q)))
        star.cells.push_back(starCellAt(q, w));
    std::sort(star.cells.begin(), star.cells.end(),
              [](const DelaunayCell& a, const DelaunayCell& b) {
                  return a.vertices < b.vertices;
              });
    return star;
}

}  // namespace zonelab
