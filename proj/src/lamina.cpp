#include "zonelab/lamina.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zonelab {

std::vector<IntVector> laminaCandidates(const DelaunayStar& star)
{
    if (star.cells.empty())
        throw std::invalid_argument("empty star");
    std::size_t n = star.cells[0].center.size();
    if (n == 1)
        return {IntVector{1}};

    std::set<IntVector> found;
    for (const DelaunayCell& cell : star.cells) {
        std::vector<IntVector> nonzero;
        for (const IntVector& v : cell.vertices)
            if (gcdAll(v) != 0)
                nonzero.push_back(v);
        // All hyperplanes through 0 spanned by n-1 independent vertices.
        std::vector<std::size_t> comb(n - 1);
        for (std::size_t i = 0; i < n - 1; ++i)
            comb[i] = i;
        if (nonzero.size() < n - 1)
            continue;
        while (true) {
            QMat m(n - 1, n);
            for (std::size_t i = 0; i < n - 1; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m.at(i, j) = nonzero[comb[i]][j];
            auto kernel = nullspace(m);
            if (kernel.size() == 1)
                found.insert(primitiveDirection(kernel[0]));
            std::size_t i = n - 1;
            bool done = false;
            while (i-- > 0) {
                if (comb[i] != nonzero.size() - (n - 1) + i) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < n - 1; ++j)
                        comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0)
                    done = true;
            }
            if (done)
                break;
        }
    }
    return {found.begin(), found.end()};
}

bool isLamina(const DelaunayStar& star, const IntVector& k)
{
    if (gcdAll(k) != 1)
        throw std::invalid_argument("lamina functional must be primitive");
    for (const DelaunayCell& cell : star.cells) {
        Int lo = 0, hi = 0;
        bool first = true;
        for (const IntVector& v : cell.vertices) {
            Int val = dotInt(k, v);
            if (first) {
                lo = hi = val;
                first = false;
            } else {
                lo = std::min(lo, val);
                hi = std::max(hi, val);
            }
        }
        if (hi - lo > 1)
            return false;
    }
    return true;
}

Rat alphaSquared(const GramForm& q, const IntVector& k)
{
    if (gcdAll(k) == 0)
        throw std::invalid_argument("zero functional");
    RatVector y;
    if (!solveLinear(q.entries, toRat(k), y))
        throw std::runtime_error("singular form");
    Rat kQk = dot(toRat(k), y);
    if (kQk <= 0)
        throw std::runtime_error("form is not positive definite");
    return 1 / kQk;
}

Rank1Form rank1Form(const GramForm& q, const IntVector& k)
{
    if (gcdAll(k) != 1)
        throw std::invalid_argument("functional must be primitive");
    Rank1Form f;
    f.k = k;
    f.alphaSq = alphaSquared(q, k);
    std::size_t n = k.size();
    f.matrix = QMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f.matrix.at(i, j) = f.alphaSq * k[i] * k[j];
    return f;
}

GramForm extendForm(const GramForm& q, const IntVector& k, const Rat& lambda)
{
    Rat a2 = alphaSquared(q, k);
    std::size_t n = q.dim();
    QMat m = q.entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) += lambda * a2 * k[i] * k[j];
    if (!isPositiveDefinite(m))
        throw std::runtime_error("extended form is not positive definite");
    return GramForm{std::move(m)};
}

namespace {

// Margin lines of all lattice points in each cell's double-radius
// ellipsoid. With toLowerLamina the cell is shifted to a base vertex on
// its lower lamina so vertex offsets have k-value in {0,1}.
std::vector<MarginLine> marginLines(const GramForm& q, const DelaunayStar& star,
                                    const IntVector& k, bool toLowerLamina)
{
    std::size_t n = q.dim();
    Rat a2 = alphaSquared(q, k);
    std::vector<MarginLine> lines;

    for (std::size_t ci = 0; ci < star.cells.size(); ++ci) {
        const DelaunayCell& cell = star.cells[ci];

        IntVector base;
        if (toLowerLamina) {
            Int lo = dotInt(k, cell.vertices[0]);
            for (const IntVector& v : cell.vertices)
                lo = std::min(lo, dotInt(k, v));
            for (const IntVector& v : cell.vertices)
                if (dotInt(k, v) == lo) {
                    base = v;  // vertices sorted: first hit is lex least
                    break;
                }
        } else {
            base = cell.vertices[0];
        }

        // Greedy independent basis from the shifted vertices.
        std::vector<IntVector> basis;
        for (const IntVector& v : cell.vertices) {
            IntVector s(n);
            for (std::size_t j = 0; j < n; ++j)
                s[j] = v[j] - base[j];
            if (gcdAll(s) == 0)
                continue;
            QMat trial(basis.size() + 1, n);
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < n; ++j)
                    trial.at(i, j) = basis[i][j];
            for (std::size_t j = 0; j < n; ++j)
                trial.at(basis.size(), j) = s[j];
            if (matRank(trial) == basis.size() + 1)
                basis.push_back(std::move(s));
            if (basis.size() == n)
                break;
        }
        if (basis.size() != n)
            throw std::runtime_error("cell vertices do not span");

        QMat bm(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                bm.at(i, j) = basis[j][i];

        for (const IntVector& u :
             enumerateInEllipsoid(q, cell.center, 4 * cell.radiusSq)) {
            IntVector off(n);
            for (std::size_t j = 0; j < n; ++j)
                off[j] = u[j] - base[j];
            if (gcdAll(off) == 0)
                continue;
            RatVector z;
            if (!solveLinear(bm, toRat(off), z))
                throw std::runtime_error("basis solve failed");
            Rat slope = Rat(dotInt(k, off)) * dotInt(k, off);
            for (std::size_t i = 0; i < n; ++i) {
                Int kb = dotInt(k, basis[i]);
                slope -= z[i] * kb * kb;
            }
            slope *= a2;
            MarginLine line;
            line.base =
                evalForm(q, subtract(toRat(u), cell.center)) - cell.radiusSq;
            line.slope = slope;
            line.cellId = ci;
            line.witness = u;
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

}  // namespace

std::vector<MarginLine> laminaCertificate(const GramForm& q,
                                          const DelaunayStar& star,
                                          const IntVector& k)
{
    if (!isLamina(star, k))
        throw std::invalid_argument("not a lamina direction");
    auto lines = marginLines(q, star, k, true);
    for (const MarginLine& line : lines)
        if (line.slope < 0)
            throw std::runtime_error("lamina certificate violated");
    return lines;
}

bool sampledInvariance(const GramForm& q, const IntVector& k,
                       const std::vector<Rat>& lambdas)
{
    std::string fp0 = fingerprint(delaunayStar(q));
    for (const Rat& lambda : lambdas)
        if (fingerprint(delaunayStar(extendForm(q, k, lambda))) != fp0)
            return false;
    return true;
}

Rat breakingLambda(const GramForm& q, const DelaunayStar& star,
                   const IntVector& k)
{
    if (isLamina(star, k))
        throw std::invalid_argument("breakingLambda expects a non-lamina direction");
    bool found = false;
    Rat best(0);
    for (const MarginLine& line : marginLines(q, star, k, false)) {
        if (line.base == 0 && line.slope != 0)
            return Rat(0);  // co-sphericity breaks for every lambda > 0
        if (line.slope < 0) {
            Rat hit = line.base / -line.slope;
            if (!found || hit < best) {
                best = hit;
                found = true;
            }
        }
    }
    if (!found)
        throw std::runtime_error(
            "no breaking witness inside the enumeration radius");
    return best;
}

Rat contractionLimit(const GramForm& q, const DelaunayStar& star,
                     const IntVector& k)
{
    if (!isLamina(star, k))
        throw std::invalid_argument("contractionLimit expects a lamina direction");
    Rat low(-1);
    for (const MarginLine& line : marginLines(q, star, k, true)) {
        if (line.slope > 0) {
            Rat hit = -line.base / line.slope;
            if (hit > low)
                low = hit;
        }
    }
    return low;
}

}  // namespace zonelab
