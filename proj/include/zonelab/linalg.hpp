#ifndef ZONELAB_LINALG_HPP
#define ZONELAB_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace zonelab {

using Int = long;
using Rat = mpq_class;

// Lattice-point coordinates in the fixed basis.
using IntVector = std::vector<Int>;
// Exact rational point/vector.
using RatVector = std::vector<Rat>;

// Dense rational matrix, row major.
struct QMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> data;

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool operator==(const QMat& o) const
    {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

// "p/q" (or "p" when q = 1), always reduced, q > 0.
std::string ratToString(const Rat& r);
Rat ratFromString(const std::string& s);

RatVector toRat(const IntVector& v);
RatVector subtract(const RatVector& a, const RatVector& b);
Rat dot(const RatVector& a, const RatVector& b);
Int dotInt(const IntVector& a, const IntVector& b);

// gcd of all coordinates (nonnegative); 0 for the zero vector.
Int gcdAll(const IntVector& v);

// Scale to coprime integer coordinates with the first nonzero coordinate
// positive. Throws on the zero vector.
IntVector primitiveDirection(const RatVector& d);
IntVector normalizeSign(IntVector k);

QMat matMul(const QMat& a, const QMat& b);
RatVector matVec(const QMat& a, const RatVector& x);

// Solve A x = b by rational Gaussian elimination with row pivoting.
// Returns false when A is singular.
bool solveLinear(QMat a, RatVector b, RatVector& x);

std::size_t matRank(QMat a);
Rat determinant(QMat a);

// Basis of the right null space {x : A x = 0}, as rows of the result.
std::vector<RatVector> nullspace(const QMat& a);

// Inverse of a square matrix; throws when singular.
QMat inverse(const QMat& a);

}  // namespace zonelab

#endif
