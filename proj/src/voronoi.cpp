#include "zonelab/voronoi.hpp"

#include "zonelab/dd.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace zonelab {

HPolytope voronoiPolytope(const GramForm& q)
{
    HPolytope p;
    p.form = q;
    p.normals = relevantVectors(q);
    if (p.normals.empty())
        throw std::runtime_error("no relevant vectors");
    for (const IntVector& v : p.normals) {
        RatVector a = matVec(q.entries, toRat(v));
        for (Rat& c : a)
            c *= 2;
        p.rows.emplace_back(std::move(a), evalForm(q, v));
    }
    return p;
}

std::vector<RatVector> enumerateVertices(const HPolytope& p)
{
    return enumeratePolytopeVertices(p.rows).vertices;
}

std::vector<std::size_t> FacePoset::fVector() const
{
    std::vector<std::size_t> f(dim);
    for (std::size_t d = 0; d < dim; ++d)
        f[d] = faces[d].size();
    return f;
}

namespace {

std::size_t affineDim(const std::vector<RatVector>& pts,
                      const std::vector<std::size_t>& subset)
{
    if (subset.empty())
        return 0;
    std::size_t n = pts[subset[0]].size();
    QMat diffs(subset.size() - 1, n);
    for (std::size_t i = 1; i < subset.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            diffs.at(i - 1, j) = pts[subset[i]][j] - pts[subset[0]][j];
    return subset.size() == 1 ? 0 : matRank(diffs);
}

}  // namespace

FacePoset buildFacePoset(const HPolytope& p)
{
    PolytopeVertices pv = enumeratePolytopeVertices(p.rows);
    std::size_t n = p.form.dim();

    FacePoset poset;
    poset.dim = n;
    poset.vertices = pv.vertices;
    std::size_t nv = pv.vertices.size();

    // Facet vertex sets from constraint activity.
    std::vector<std::vector<std::size_t>> facetSets(p.rows.size());
    for (std::size_t vi = 0; vi < nv; ++vi)
        for (std::size_t ci : pv.activeSets[vi])
            facetSets[ci].push_back(vi);
    for (auto& s : facetSets) {
        std::sort(s.begin(), s.end());
        if (affineDim(poset.vertices, s) != n - 1)
            throw std::runtime_error("redundant inequality: not a facet");
    }

    // Faces are the vertex sets obtained by closing the facet sets under
    // intersection; robust for non-simple polytopes.
    std::set<std::vector<std::size_t>> closure(facetSets.begin(), facetSets.end());
    {
        std::vector<std::vector<std::size_t>> work(closure.begin(), closure.end());
        while (!work.empty()) {
            std::vector<std::vector<std::size_t>> added;
            for (const auto& a : work)
                for (const auto& f : facetSets) {
                    std::vector<std::size_t> inter;
                    std::set_intersection(a.begin(), a.end(), f.begin(), f.end(),
                                          std::back_inserter(inter));
                    if (!inter.empty() && !closure.count(inter)) {
                        closure.insert(inter);
                        added.push_back(std::move(inter));
                    }
                }
            work = std::move(added);
        }
    }

    poset.faces.resize(n + 1);
    for (const auto& s : closure) {
        Face f;
        f.vertexSet = s;
        f.dim = affineDim(poset.vertices, s);
        for (std::size_t ci = 0; ci < facetSets.size(); ++ci)
            if (std::includes(facetSets[ci].begin(), facetSets[ci].end(),
                              s.begin(), s.end()))
                f.activeInequalities.push_back(ci);
        poset.faces[f.dim].push_back(std::move(f));
    }
    {
        // The polytope itself is the top face.
        Face top;
        top.dim = n;
        for (std::size_t vi = 0; vi < nv; ++vi)
            top.vertexSet.push_back(vi);
        poset.faces[n].push_back(std::move(top));
    }
    for (auto& level : poset.faces)
        std::sort(level.begin(), level.end(), [](const Face& a, const Face& b) {
            return a.vertexSet < b.vertexSet;
        });

    for (std::size_t d = 1; d < n; ++d)
        for (const Face& f : poset.faces[d])
            if (d == 1 && f.vertexSet.size() != 2)
                throw std::runtime_error("edge with vertex count != 2");

    poset.children.resize(n + 1);
    for (std::size_t d = 1; d <= n; ++d) {
        poset.children[d].resize(poset.faces[d].size());
        for (std::size_t i = 0; i < poset.faces[d].size(); ++i)
            for (std::size_t j = 0; j < poset.faces[d - 1].size(); ++j)
                if (std::includes(poset.faces[d][i].vertexSet.begin(),
                                  poset.faces[d][i].vertexSet.end(),
                                  poset.faces[d - 1][j].vertexSet.begin(),
                                  poset.faces[d - 1][j].vertexSet.end()))
                    poset.children[d][i].push_back(j);
    }
    return poset;
}

std::vector<Zone> zones(const FacePoset& poset)
{
    std::map<IntVector, Zone> byDirection;
    for (std::size_t e = 0; e < poset.faces[1].size(); ++e) {
        const Face& edge = poset.faces[1][e];
        RatVector d = subtract(poset.vertices[edge.vertexSet[1]],
                               poset.vertices[edge.vertexSet[0]]);
        IntVector dir = primitiveDirection(d);
        Zone& z = byDirection[dir];
        z.direction = dir;
        z.edgeIds.push_back(e);
    }
    std::vector<Zone> out;
    for (auto& [dir, z] : byDirection) {
        z.closed = classifyZone(poset, z);
        out.push_back(std::move(z));
    }
    return out;
}

bool classifyZone(const FacePoset& poset, const Zone& z)
{
    if (z.edgeIds.empty())
        throw std::invalid_argument("empty zone");
    std::set<std::size_t> zoneEdges(z.edgeIds.begin(), z.edgeIds.end());
    for (const Face& face : poset.faces[2]) {
        std::size_t count = 0;
        for (std::size_t e = 0; e < poset.faces[1].size(); ++e) {
            if (!zoneEdges.count(e))
                continue;
            const auto& ev = poset.faces[1][e].vertexSet;
            if (std::includes(face.vertexSet.begin(), face.vertexSet.end(),
                              ev.begin(), ev.end()))
                ++count;
        }
        if (count != 0 && count != 2)
            return false;
    }
    return true;
}

IntVector zoneFunctional(const GramForm& q, const Zone& z)
{
    return primitiveDirection(matVec(q.entries, toRat(z.direction)));
}

}  // namespace zonelab
