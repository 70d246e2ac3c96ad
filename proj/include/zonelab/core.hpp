#ifndef ZONELAB_CORE_HPP
#define ZONELAB_CORE_HPP

#include "zonelab/linalg.hpp"

#include <string>

namespace zonelab {

// Gram matrix of a lattice basis: the positive definite rational quadratic
// form that carries all metric information. Every geometric predicate in
// this library goes through exact arithmetic on these entries.
struct GramForm {
    QMat entries;  // symmetric, positive definite

    std::size_t dim() const { return entries.rows; }

    static GramForm identity(std::size_t n);
    // Validates symmetry and positive definiteness; throws otherwise.
    static GramForm fromMatrix(QMat m);
};

bool isSymmetric(const QMat& m);

// True iff all leading principal minors are positive. Throws on
// non-symmetric input.
bool isPositiveDefinite(const QMat& m);

// z^T Q z
Rat evalForm(const GramForm& q, const RatVector& z);
Rat evalForm(const GramForm& q, const IntVector& z);

// u^T Q v, the scalar product induced by the form.
Rat innerQ(const GramForm& q, const RatVector& u, const RatVector& v);

struct Sphere {
    RatVector center;
    Rat radiusSq;
};

// Center and squared radius of the sphere through 0 and the endpoints of
// the n linearly independent lattice vectors. Solves 2 v_i^T Q c = v_i^2.
Sphere circumcenter(const GramForm& q, const std::vector<IntVector>& basis);

// Empty-sphere margin: u^2 - sum z_i v_i^2 with u = sum z_i v_i.
// Positive outside the sphere through 0 and the v_i, zero on it,
// negative strictly inside.
Rat emptyMargin(const GramForm& q, const std::vector<IntVector>& basis,
                const IntVector& u);

}  // namespace zonelab

#endif
