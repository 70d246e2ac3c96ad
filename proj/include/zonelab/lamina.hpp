#ifndef ZONELAB_LAMINA_HPP
#define ZONELAB_LAMINA_HPP

#include "zonelab/core.hpp"
#include "zonelab/delaunay.hpp"

#include <vector>

namespace zonelab {

// Rank 1 quadratic form alphaSq * (k.x)^2.
struct Rank1Form {
    IntVector k;
    Rat alphaSq;
    QMat matrix;
};

// Linear-in-lambda margin of one witness point over one cell's sphere
// under Q + lambda * alphaSq * k k^T.
struct MarginLine {
    Rat base;   // margin at lambda = 0
    Rat slope;  // coefficient of lambda
    std::size_t cellId = 0;
    IntVector witness;
};

// Primitive normals of all hyperplanes through 0 spanned by n-1 linearly
// independent vertices of star cells, plus nothing else; contains every
// lamina normal because a lamina through 0 is tiled by star-cell facets.
std::vector<IntVector> laminaCandidates(const DelaunayStar& star);

// Layer test: k is a lamina normal iff every cell's vertices take at most
// two consecutive values under k.
bool isLamina(const DelaunayStar& star, const IntVector& k);

// alpha^2 = 1 / (k^T Q^{-1} k): squared scale of the unit normal
// e = alpha Q^{-1} k of the hyperplane k.x = 0.
Rat alphaSquared(const GramForm& q, const IntVector& k);

Rank1Form rank1Form(const GramForm& q, const IntVector& k);

// Q + lambda * alphaSq(k) * k k^T; throws when the result is not positive
// definite (possible only for lambda <= -1).
GramForm extendForm(const GramForm& q, const IntVector& k, const Rat& lambda);

// For a lamina direction: margin lines of all lattice points in each
// cell's double-radius ellipsoid, with offsets normalized to the cell's
// lower lamina. Every slope is >= 0, which certifies L-type invariance
// for all lambda >= 0.
std::vector<MarginLine> laminaCertificate(const GramForm& q,
                                          const DelaunayStar& star,
                                          const IntVector& k);

// True iff the star fingerprint is unchanged at every sampled lambda.
bool sampledInvariance(const GramForm& q, const IntVector& k,
                       const std::vector<Rat>& lambdas);

// Least lambda > 0 at which the subdivision changes along direction k
// (k not a lamina); 0 when the star is degenerate in direction k.
Rat breakingLambda(const GramForm& q, const DelaunayStar& star,
                   const IntVector& k);

// Greatest lower bound of lambda < 0 preserving the subdivision along a
// lamina direction, clamped at the positive-definiteness limit -1.
Rat contractionLimit(const GramForm& q, const DelaunayStar& star,
                     const IntVector& k);

}  // namespace zonelab

#endif
