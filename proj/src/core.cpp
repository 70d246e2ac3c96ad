#include "zonelab/core.hpp"

#include <stdexcept>

namespace zonelab {

GramForm GramForm::identity(std::size_t n)
{
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return GramForm{std::move(m)};
}

GramForm GramForm::fromMatrix(QMat m)
{
    if (m.rows == 0)
        throw std::invalid_argument("empty form");
    if (!isPositiveDefinite(m))
        throw std::invalid_argument("form is not positive definite");
    return GramForm{std::move(m)};
}

bool isSymmetric(const QMat& m)
{
    if (m.rows != m.cols)
        return false;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != m.at(j, i))
                return false;
    return true;
}

bool isPositiveDefinite(const QMat& m)
{
    if (!isSymmetric(m))
        throw std::invalid_argument("non-symmetric matrix");
    // Symmetric elimination without pivoting: the pivots are the ratios of
    // consecutive leading principal minors, so all-positive pivots is
    // exactly the leading-minor criterion.
    QMat a = m;
    std::size_t n = a.rows;
    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k) <= 0)
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j)
                a.at(i, j) -= f * a.at(k, j);
        }
    }
    return true;
}

Rat evalForm(const GramForm& q, const RatVector& z)
{
    if (z.size() != q.dim())
        throw std::invalid_argument("evalForm: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0)
            continue;
        for (std::size_t j = 0; j < z.size(); ++j)
            s += z[i] * q.entries.at(i, j) * z[j];
    }
    return s;
}

Rat evalForm(const GramForm& q, const IntVector& z)
{
    return evalForm(q, toRat(z));
}

Rat innerQ(const GramForm& q, const RatVector& u, const RatVector& v)
{
    if (u.size() != q.dim() || v.size() != q.dim())
        throw std::invalid_argument("innerQ: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            s += u[i] * q.entries.at(i, j) * v[j];
    }
    return s;
}

Sphere circumcenter(const GramForm& q, const std::vector<IntVector>& basis)
{
    std::size_t n = q.dim();
    if (basis.size() != n)
        throw std::invalid_argument("circumcenter expects n vectors");
    // v_i on the sphere through 0 with center c: v_i^2 = 2 (v_i, c).
    QMat a(n, n);
    RatVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVector qv = matVec(q.entries, toRat(basis[i]));
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = 2 * qv[j];
        b[i] = evalForm(q, basis[i]);
    }
    RatVector c;
    if (!solveLinear(a, b, c))
        throw std::runtime_error("circumcenter: vectors are linearly dependent");
    return Sphere{c, evalForm(q, c)};
}

Rat emptyMargin(const GramForm& q, const std::vector<IntVector>& basis,
                const IntVector& u)
{
    std::size_t n = q.dim();
    if (basis.size() != n || u.size() != n)
        throw std::invalid_argument("emptyMargin: dimension mismatch");
    // Solve u = sum z_i v_i.
    QMat a(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            a.at(i, j) = basis[j][i];
    RatVector z;
    if (!solveLinear(a, toRat(u), z))
        throw std::runtime_error("emptyMargin: vectors are linearly dependent");
    Rat margin = evalForm(q, u);
    for (std::size_t i = 0; i < n; ++i)
        margin -= z[i] * evalForm(q, basis[i]);
    return margin;
}

}  // namespace zonelab
