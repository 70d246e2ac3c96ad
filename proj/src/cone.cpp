#include "zonelab/cone.hpp"

#include "zonelab/dd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zonelab {

RatVector FormFunctional::flattenedRow() const
{
    std::size_t n = coeffs.rows;
    RatVector row;
    row.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            row.push_back(i == j ? coeffs.at(i, j) : 2 * coeffs.at(i, j));
    return row;
}

namespace {

RatVector flattenForm(const QMat& m)
{
    std::size_t n = m.rows;
    RatVector v;
    v.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            v.push_back(m.at(i, j));
    return v;
}

QMat unflattenForm(const RatVector& v, std::size_t n)
{
    QMat m(n, n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            m.at(i, j) = v[idx];
            m.at(j, i) = v[idx];
            ++idx;
        }
    return m;
}

Rat applyFunctional(const FormFunctional& f, const QMat& form)
{
    Rat s(0);
    for (std::size_t i = 0; i < f.coeffs.rows; ++i)
        for (std::size_t j = 0; j < f.coeffs.cols; ++j)
            s += f.coeffs.at(i, j) * form.at(i, j);
    return s;
}

// Canonical positive scaling: integer entries, gcd 1. Direction preserved
// (flipping would change an inequality).
QMat canonicalScale(const QMat& m)
{
    RatVector flat = flattenForm(m);
    mpz_class lcm(1);
    for (const Rat& c : flat)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class g(0);
    std::vector<mpz_class> scaled(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        scaled[i] = flat[i].get_num() * (lcm / flat[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
    }
    if (g == 0)
        throw std::invalid_argument("zero functional");
    RatVector out(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i)
        out[i] = Rat(scaled[i] / g);
    return unflattenForm(out, m.rows);
}

// Margin of the lattice vector u over the sphere through 0 and the basis
// vectors, as a linear functional of the form: u u^T - sum z_i b_i b_i^T.
FormFunctional marginFunctional(const std::vector<IntVector>& basis,
                                const IntVector& u)
{
    std::size_t n = u.size();
    QMat bm(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            bm.at(i, j) = basis[j][i];
    RatVector z;
    if (!solveLinear(bm, toRat(u), z))
        throw std::runtime_error("margin functional: dependent basis");
    QMat c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            c.at(i, j) = Rat(u[i]) * u[j];
            for (std::size_t b = 0; b < n; ++b)
                c.at(i, j) -= z[b] * basis[b][i] * basis[b][j];
        }
    return FormFunctional{std::move(c)};
}

// Greedy linearly independent basis among the cell's vertices shifted to
// its lexicographically least vertex; returns the shifted vertex list too.
struct ShiftedCell {
    IntVector base;
    std::vector<IntVector> shifted;  // nonzero offsets
    std::vector<IntVector> basis;
};

ShiftedCell shiftCell(const DelaunayCell& cell)
{
    std::size_t n = cell.center.size();
    ShiftedCell out;
    out.base = cell.vertices[0];
    for (const IntVector& v : cell.vertices) {
        IntVector s(n);
        for (std::size_t j = 0; j < n; ++j)
            s[j] = v[j] - out.base[j];
        if (gcdAll(s) != 0)
            out.shifted.push_back(std::move(s));
    }
    for (const IntVector& s : out.shifted) {
        if (out.basis.size() == n)
            break;
        QMat trial(out.basis.size() + 1, n);
        for (std::size_t i = 0; i < out.basis.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                trial.at(i, j) = out.basis[i][j];
        for (std::size_t j = 0; j < n; ++j)
            trial.at(out.basis.size(), j) = s[j];
        if (matRank(trial) == out.basis.size() + 1)
            out.basis.push_back(s);
    }
    if (out.basis.size() != n)
        throw std::runtime_error("cell vertices do not span");
    return out;
}

}  // namespace

SecondaryCone coneOfLType(const GramForm& q, const DelaunayStar& star)
{
    std::size_t n = q.dim();
    SecondaryCone cone;
    cone.n = n;
    cone.ambientDim = n * (n + 1) / 2;

    std::vector<ShiftedCell> shifted;
    shifted.reserve(star.cells.size());
    for (const DelaunayCell& cell : star.cells)
        shifted.push_back(shiftCell(cell));

    std::map<std::vector<Rat>, char> seen;  // canonical functional -> kind
    auto addFunctional = [&](FormFunctional f, bool equality) {
        f.coeffs = canonicalScale(f.coeffs);
        auto key = flattenForm(f.coeffs);
        auto it = seen.find(key);
        if (it != seen.end())
            return;
        seen.emplace(std::move(key), equality ? 'e' : 'i');
        Rat atQ = applyFunctional(f, q.entries);
        if (equality) {
            if (atQ != 0)
                throw std::runtime_error("co-sphericity functional nonzero at Q");
            cone.equalities.push_back(std::move(f));
        } else {
            if (atQ <= 0)
                throw std::runtime_error("adjacency margin not strictly positive at Q");
            cone.inequalities.push_back(std::move(f));
        }
    };

    // Equalities: extra co-spherical vertices of each cell.
    for (const ShiftedCell& sc : shifted) {
        for (const IntVector& s : sc.shifted) {
            if (std::find(sc.basis.begin(), sc.basis.end(), s) != sc.basis.end())
                continue;
            addFunctional(marginFunctional(sc.basis, s), true);
        }
    }

    // Inequalities: for each facet through 0 shared by two star cells, the
    // margin of the neighbor's off-facet vertex over the cell.
    std::map<std::vector<IntVector>, std::vector<std::size_t>> facetOwners;
    std::vector<std::vector<CellFacet>> allFacets(star.cells.size());
    for (std::size_t ci = 0; ci < star.cells.size(); ++ci) {
        allFacets[ci] = cellFacets(star.cells[ci]);
        for (const CellFacet& f : allFacets[ci]) {
            IntVector zero(n, 0);
            if (std::binary_search(f.vertices.begin(), f.vertices.end(), zero))
                facetOwners[f.vertices].push_back(ci);
        }
    }
    for (const auto& [facetVerts, owners] : facetOwners) {
        if (owners.size() != 2)
            throw std::runtime_error("facet through 0 not shared by exactly two cells");
        for (int side = 0; side < 2; ++side) {
            std::size_t a = owners[side], b = owners[1 - side];
            // First vertex of b off the shared facet.
            const IntVector* apex = nullptr;
            for (const IntVector& v : star.cells[b].vertices)
                if (!std::binary_search(facetVerts.begin(), facetVerts.end(), v)) {
                    apex = &v;
                    break;
                }
            if (!apex)
                throw std::runtime_error("neighbor cell has no off-facet vertex");
            IntVector u(n);
            for (std::size_t j = 0; j < n; ++j)
                u[j] = (*apex)[j] - shifted[a].base[j];
            addFunctional(marginFunctional(shifted[a].basis, u), false);
        }
    }
    return cone;
}

std::size_t coneDimension(const SecondaryCone& cone)
{
    if (cone.equalities.empty())
        return cone.ambientDim;
    QMat eq(cone.equalities.size(), cone.ambientDim);
    for (std::size_t i = 0; i < cone.equalities.size(); ++i) {
        RatVector row = cone.equalities[i].flattenedRow();
        for (std::size_t j = 0; j < cone.ambientDim; ++j)
            eq.at(i, j) = row[j];
    }
    return cone.ambientDim - matRank(eq);
}

ExtremeRay classifyRay(QMat generator)
{
    ExtremeRay ray;
    ray.rank = matRank(generator);
    if (ray.rank == 1) {
        for (std::size_t i = 0; i < generator.rows; ++i) {
            RatVector row(generator.cols);
            bool nonzero = false;
            for (std::size_t j = 0; j < generator.cols; ++j) {
                row[j] = generator.at(i, j);
                if (row[j] != 0)
                    nonzero = true;
            }
            if (nonzero) {
                ray.rank1K = primitiveDirection(row);
                break;
            }
        }
    }
    ray.generator = std::move(generator);
    return ray;
}

std::vector<ExtremeRay> extremeRays(const SecondaryCone& cone)
{
    std::size_t N = cone.ambientDim;

    // Parametrize the equality subspace, then run double description on
    // the transformed inequalities.
    std::vector<RatVector> subspace;
    if (cone.equalities.empty()) {
        for (std::size_t i = 0; i < N; ++i) {
            RatVector e(N, Rat(0));
            e[i] = 1;
            subspace.push_back(std::move(e));
        }
    } else {
        QMat eq(cone.equalities.size(), N);
        for (std::size_t i = 0; i < cone.equalities.size(); ++i) {
            RatVector row = cone.equalities[i].flattenedRow();
            for (std::size_t j = 0; j < N; ++j)
                eq.at(i, j) = row[j];
        }
        subspace = nullspace(eq);
    }
    std::size_t k = subspace.size();
    if (k == 0)
        return {};
    if (cone.inequalities.empty())
        throw std::runtime_error("cone has no inequalities (contains a line)");

    std::vector<RatVector> rows;
    rows.reserve(cone.inequalities.size());
    for (const FormFunctional& f : cone.inequalities) {
        RatVector c = f.flattenedRow();
        RatVector row(k, Rat(0));
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < N; ++j)
                row[t] += c[j] * subspace[t][j];
        rows.push_back(std::move(row));
    }

    std::vector<ExtremeRay> out;
    for (const IntVector& t : extremeRaysOfCone(rows)) {
        RatVector flat(N, Rat(0));
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t j = 0; j < N; ++j)
                flat[j] += Rat(t[b]) * subspace[b][j];
        QMat gen = canonicalScale(unflattenForm(flat, cone.n));
        out.push_back(classifyRay(std::move(gen)));
    }
    std::sort(out.begin(), out.end(), [](const ExtremeRay& a, const ExtremeRay& b) {
        return a.generator.data < b.generator.data;
    });
    return out;
}

bool isDicing(const std::vector<ExtremeRay>& rays)
{
    return std::all_of(rays.begin(), rays.end(),
                       [](const ExtremeRay& r) { return r.rank == 1; });
}

bool rayMembership(const std::vector<ExtremeRay>& rays, const Rank1Form& f)
{
    QMat canon = canonicalScale(f.matrix);
    for (const ExtremeRay& r : rays)
        if (r.generator == canon)
            return true;
    return false;
}

}  // namespace zonelab
