#include "zonelab/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace zonelab {

std::string ratToString(const Rat& r)
{
    Rat c(r);
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat ratFromString(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

RatVector toRat(const IntVector& v)
{
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rat(v[i]);
    return out;
}

RatVector subtract(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector dimension mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Rat dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Int dotInt(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Int gcdAll(const IntVector& v)
{
    Int g = 0;
    for (Int c : v)
        g = std::gcd(g, c < 0 ? -c : c);
    return g;
}

IntVector normalizeSign(IntVector k)
{
    for (Int c : k) {
        if (c > 0)
            break;
        if (c < 0) {
            for (Int& x : k)
                x = -x;
            break;
        }
    }
    return k;
}

IntVector primitiveDirection(const RatVector& d)
{
    // Clear denominators, then divide out the gcd.
    mpz_class lcm(1);
    for (const Rat& c : d)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> scaled(d.size());
    mpz_class g(0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        scaled[i] = d[i].get_num() * (lcm / d[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
    }
    if (g == 0)
        throw std::invalid_argument("zero direction vector");
    IntVector out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        mpz_class q = scaled[i] / g;
        if (!q.fits_slong_p())
            throw std::overflow_error("direction coordinate overflow");
        out[i] = q.get_si();
    }
    return normalizeSign(out);
}

QMat matMul(const QMat& a, const QMat& b)
{
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix dimension mismatch");
    QMat c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

RatVector matVec(const QMat& a, const RatVector& x)
{
    if (a.cols != x.size())
        throw std::invalid_argument("matrix dimension mismatch");
    RatVector y(a.rows, Rat(0));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            y[i] += a.at(i, j) * x[j];
    return y;
}

namespace {

// Forward elimination with row pivoting; returns pivot columns.
// a is modified in place; rhs (if nonnull) follows the row operations.
std::vector<std::size_t> eliminate(QMat& a, RatVector* rhs)
{
    std::vector<std::size_t> pivotCols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t p = row;
        while (p < a.rows && a.at(p, col) == 0)
            ++p;
        if (p == a.rows)
            continue;
        if (p != row) {
            for (std::size_t j = 0; j < a.cols; ++j)
                std::swap(a.at(p, j), a.at(row, j));
            if (rhs)
                std::swap((*rhs)[p], (*rhs)[row]);
        }
        for (std::size_t i = row + 1; i < a.rows; ++i) {
            if (a.at(i, col) == 0)
                continue;
            Rat f = a.at(i, col) / a.at(row, col);
            a.at(i, col) = 0;
            for (std::size_t j = col + 1; j < a.cols; ++j)
                a.at(i, j) -= f * a.at(row, j);
            if (rhs)
                (*rhs)[i] -= f * (*rhs)[row];
        }
        pivotCols.push_back(col);
        ++row;
    }
    return pivotCols;
}

}  // namespace

bool solveLinear(QMat a, RatVector b, RatVector& x)
{
    if (a.rows != a.cols || b.size() != a.rows)
        throw std::invalid_argument("solveLinear expects a square system");
    auto pivots = eliminate(a, &b);
    if (pivots.size() != a.cols)
        return false;
    x.assign(a.cols, Rat(0));
    for (std::size_t i = a.cols; i-- > 0;) {
        Rat s = b[i];
        for (std::size_t j = i + 1; j < a.cols; ++j)
            s -= a.at(i, j) * x[j];
        x[i] = s / a.at(i, i);
    }
    return true;
}

std::size_t matRank(QMat a)
{
    return eliminate(a, nullptr).size();
}

Rat determinant(QMat a)
{
    if (a.rows != a.cols)
        throw std::invalid_argument("determinant of non-square matrix");
    // Track row swaps for the sign.
    int sign = 1;
    std::size_t n = a.rows;
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a.at(p, col) == 0)
            ++p;
        if (p == n)
            return Rat(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(p, j), a.at(col, j));
            sign = -sign;
        }
        det *= a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0)
                continue;
            Rat f = a.at(i, col) / a.at(col, col);
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) -= f * a.at(col, j);
        }
    }
    return sign < 0 ? Rat(-det) : det;
}

std::vector<RatVector> nullspace(const QMat& a)
{
    QMat m = a;
    auto pivots = eliminate(m, nullptr);
    std::vector<bool> isPivot(m.cols, false);
    for (std::size_t c : pivots)
        isPivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t freeCol = 0; freeCol < m.cols; ++freeCol) {
        if (isPivot[freeCol])
            continue;
        RatVector x(m.cols, Rat(0));
        x[freeCol] = 1;
        for (std::size_t i = pivots.size(); i-- > 0;) {
            std::size_t pc = pivots[i];
            if (pc >= freeCol)
                continue;
            Rat s(0);
            for (std::size_t j = pc + 1; j < m.cols; ++j)
                s -= m.at(i, j) * x[j];
            x[pc] = s / m.at(i, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

QMat inverse(const QMat& a)
{
    if (a.rows != a.cols)
        throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = a.rows;
    QMat inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rat(0)), x;
        e[j] = 1;
        if (!solveLinear(a, e, x))
            throw std::runtime_error("singular matrix");
        for (std::size_t i = 0; i < n; ++i)
            inv.at(i, j) = x[i];
    }
    return inv;
}

}  // namespace zonelab
