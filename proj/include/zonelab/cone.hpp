#ifndef ZONELAB_CONE_HPP
#define ZONELAB_CONE_HPP

#include "zonelab/core.hpp"
#include "zonelab/delaunay.hpp"
#include "zonelab/lamina.hpp"

#include <optional>
#include <vector>

namespace zonelab {

// Linear functional on form space: acts on a form F by sum_ij C_ij F_ij.
struct FormFunctional {
    QMat coeffs;  // symmetric n x n

    // Row over the n(n+1)/2 upper-triangle coordinates of a symmetric
    // matrix (off-diagonal entries weighted by 2).
    RatVector flattenedRow() const;
};

// Closure of the L-type domain of a form: equalities from co-spherical
// cell vertices, inequalities from facet adjacencies in the star.
struct SecondaryCone {
    std::size_t n = 0;
    std::size_t ambientDim = 0;  // n(n+1)/2
    std::vector<FormFunctional> equalities;    // = 0
    std::vector<FormFunctional> inequalities;  // >= 0
};

struct ExtremeRay {
    QMat generator;  // symmetric, integer entries, gcd 1
    std::size_t rank = 0;
    std::optional<IntVector> rank1K;  // primitive k with generator ~ k k^T
};

SecondaryCone coneOfLType(const GramForm& q, const DelaunayStar& star);

std::vector<ExtremeRay> extremeRays(const SecondaryCone& cone);

// Matrix rank over the rationals; fills rank1K when rank is 1.
ExtremeRay classifyRay(QMat generator);

bool isDicing(const std::vector<ExtremeRay>& rays);

// True iff the rank 1 form is a positive multiple of some extreme ray.
bool rayMembership(const std::vector<ExtremeRay>& rays, const Rank1Form& f);

// Dimension of the cone: ambientDim minus the rank of the equalities.
std::size_t coneDimension(const SecondaryCone& cone);

}  // namespace zonelab

#endif
