#include "zonelab/delaunay.hpp"

#include "zonelab/dd.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zonelab {

namespace {

// Q = L D L^T with L unit lower triangular, D positive diagonal.
struct LdlT {
    QMat l;
    RatVector d;
};

LdlT ldlDecompose(const GramForm& q)
{
    std::size_t n = q.dim();
    QMat l(n, n);
    RatVector d(n);
    QMat a = q.entries;
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = a.at(k, k);
        if (d[k] <= 0)
            throw std::runtime_error("form is not positive definite");
        l.at(k, k) = 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            l.at(i, k) = a.at(i, k) / d[k];
            for (std::size_t j = k; j < n; ++j)
                a.at(i, j) -= l.at(i, k) * a.at(k, j);
        }
    }
    return LdlT{std::move(l), std::move(d)};
}

mpz_class ratFloor(const Rat& r)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return f;
}

void enumerateLevel(const LdlT& ldl, const RatVector& c, const Rat& r2,
                    std::size_t level, IntVector& z, const Rat& used,
                    std::vector<IntVector>& out)
{
    // Term at this level: D_i (w_i + t)^2 with w_i = z_i - c_i and
    // t = sum_{j>i} L_ji w_j; quadratic in z_i, minimized at c_i - t.
    std::size_t i = level;
    Rat t(0);
    for (std::size_t j = i + 1; j < z.size(); ++j)
        t += ldl.l.at(j, i) * (Rat(z[j]) - c[j]);
    Rat rem = r2 - used;
    Rat center = c[i] - t;

    auto fits = [&](long zi) {
        Rat w = Rat(zi) - center;
        return ldl.d[i] * w * w <= rem;
    };
    auto descend = [&](long zi) {
        z[i] = zi;
        if (i == 0) {
            out.push_back(z);
            return;
        }
        Rat w = Rat(zi) - center;
        enumerateLevel(ldl, c, r2, i - 1, z, used + ldl.d[i] * w * w, out);
    };

    mpz_class fl = ratFloor(center);
    if (!fl.fits_slong_p())
        throw std::overflow_error("enumeration coordinate overflow");
    long base = fl.get_si();
    for (long zi = base; fits(zi); --zi)
        descend(zi);
    for (long zi = base + 1; fits(zi); ++zi)
        descend(zi);
}

}  // namespace

std::vector<IntVector> enumerateInEllipsoid(const GramForm& q,
                                            const RatVector& c,
                                            const Rat& r2)
{
    if (c.size() != q.dim())
        throw std::invalid_argument("enumerateInEllipsoid: dimension mismatch");
    std::vector<IntVector> out;
    if (r2 < 0)
        return out;
    LdlT ldl = ldlDecompose(q);
    IntVector z(q.dim(), 0);
    enumerateLevel(ldl, c, r2, q.dim() - 1, z, Rat(0), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CosetRecord> cosetMinima(const GramForm& q)
{
    std::size_t n = q.dim();
    if (n > 20)
        throw std::invalid_argument("dimension too large for coset enumeration");
    std::size_t classes = (std::size_t(1) << n) - 1;

    Rat maxDiag(0);
    for (std::size_t i = 0; i < n; ++i)
        maxDiag = std::max(maxDiag, q.entries.at(i, i));
    Rat radius = 2 * maxDiag;

    RatVector origin(n, Rat(0));
    while (true) {
        std::vector<std::vector<IntVector>> byClass(classes + 1);
        for (const IntVector& z : enumerateInEllipsoid(q, origin, radius)) {
            std::size_t key = 0;
            for (std::size_t i = 0; i < n; ++i)
                key |= std::size_t((z[i] % 2 + 2) % 2) << i;
            if (key != 0)
                byClass[key].push_back(z);
        }
        bool certified = true;
        std::vector<CosetRecord> records;
        for (std::size_t key = 1; key <= classes; ++key) {
            Rat best(-1);
            std::vector<IntVector> minima;
            for (const IntVector& z : byClass[key]) {
                Rat norm = evalForm(q, z);
                if (best < 0 || norm < best) {
                    best = norm;
                    minima.clear();
                }
                if (norm == best)
                    minima.push_back(z);
            }
            // The minimum is certified only once it is well inside the
            // enumeration radius; otherwise grow the radius and retry.
            if (best < 0 || best > radius / 2) {
                certified = false;
                break;
            }
            CosetRecord rec;
            rec.representative.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                rec.representative[i] = (key >> i) & 1;
            rec.minNorm = best;
            for (IntVector m : minima) {
                m = normalizeSign(std::move(m));
                if (std::find(rec.minVectors.begin(), rec.minVectors.end(), m) ==
                    rec.minVectors.end())
                    rec.minVectors.push_back(std::move(m));
            }
            std::sort(rec.minVectors.begin(), rec.minVectors.end());
            rec.simple = rec.minVectors.size() == 1;
            records.push_back(std::move(rec));
        }
        if (certified)
            return records;
        radius *= 2;
    }
}

std::vector<IntVector> relevantVectors(const GramForm& q)
{
    std::vector<IntVector> out;
    for (const CosetRecord& rec : cosetMinima(q)) {
        if (!rec.simple)
            continue;
        IntVector m = rec.minVectors[0];
        IntVector neg(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            neg[i] = -m[i];
        out.push_back(std::move(m));
        out.push_back(std::move(neg));
    }
    std::sort(out.begin(), out.end());
    return out;
}

DelaunayCell starCellAt(const GramForm& q, const RatVector& w)
{
    std::size_t n = q.dim();
    Rat r2 = evalForm(q, w);
    DelaunayCell cell;
    cell.center = w;
    cell.radiusSq = r2;
    for (const IntVector& z : enumerateInEllipsoid(q, w, r2)) {
        Rat dist = evalForm(q, subtract(toRat(z), w));
        if (dist < r2)
            throw std::runtime_error(
                "empty-sphere violation: lattice point strictly inside; "
                "the given point is not a Voronoi vertex");
        cell.vertices.push_back(z);
    }
    std::sort(cell.vertices.begin(), cell.vertices.end());
    if (cell.vertices.size() < n + 1)
        throw std::runtime_error("degenerate cell: too few co-spherical points");
    // Affine span must be full-dimensional.
    QMat diffs(cell.vertices.size() - 1, n);
    for (std::size_t i = 1; i < cell.vertices.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            diffs.at(i - 1, j) = cell.vertices[i][j] - cell.vertices[0][j];
    if (matRank(diffs) != n)
        throw std::runtime_error("degenerate cell: vertices do not span");
    return cell;
}

std::string fingerprint(const DelaunayStar& star)
{
    std::vector<std::string> cells;
    for (const DelaunayCell& cell : star.cells) {
        std::ostringstream os;
        for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
            if (i)
                os << '|';
            for (std::size_t j = 0; j < cell.vertices[i].size(); ++j) {
                if (j)
                    os << ',';
                os << cell.vertices[i][j];
            }
        }
        cells.push_back(os.str());
    }
    std::sort(cells.begin(), cells.end());
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += ';';
        out += cells[i];
    }
    return out;
}

std::vector<CellFacet> cellFacets(const DelaunayCell& cell)
{
    std::size_t n = cell.center.size();
    const auto& verts = cell.vertices;
    std::vector<CellFacet> facets;

    // Every facet hyperplane is spanned by n affinely independent vertices,
    // so scanning n-subsets finds them all.
    auto tryHyperplane = [&](const std::vector<std::size_t>& pick) {
        QMat diffs(n - 1, n);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                diffs.at(i - 1, j) = verts[pick[i]][j] - verts[pick[0]][j];
        auto kernel = nullspace(diffs);
        if (kernel.size() != 1)
            return;  // affinely dependent pick
        IntVector g = primitiveDirection(kernel[0]);
        Rat offset(0);
        for (std::size_t j = 0; j < n; ++j)
            offset += Rat(g[j]) * verts[pick[0]][j];
        bool above = false, below = false;
        for (const IntVector& v : verts) {
            Rat val(0);
            for (std::size_t j = 0; j < n; ++j)
                val += Rat(g[j]) * v[j];
            if (val > offset)
                above = true;
            else if (val < offset)
                below = true;
        }
        if (above && below)
            return;  // cuts the cell, not supporting
        if (above) {
            for (Int& c : g)
                c = -c;
            offset = -offset;
        }
        for (const CellFacet& f : facets)
            if (f.normal == g && f.offset == offset)
                return;
        CellFacet f;
        f.normal = std::move(g);
        f.offset = offset;
        for (const IntVector& v : verts) {
            Rat val(0);
            for (std::size_t j = 0; j < n; ++j)
                val += Rat(f.normal[j]) * v[j];
            if (val == f.offset)
                f.vertices.push_back(v);
        }
        facets.push_back(std::move(f));
    };

    // Iterate over all n-subsets of vertex indices.
    std::vector<std::size_t> comb(n);
    for (std::size_t i = 0; i < n; ++i)
        comb[i] = i;
    while (true) {
        tryHyperplane(comb);
        std::size_t i = n;
        while (i-- > 0) {
            if (comb[i] != verts.size() - n + i) {
                ++comb[i];
                for (std::size_t j = i + 1; j < n; ++j)
                    comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0)
                return facets;
        }
    }
}

DelaunayStar liftingOracle(const GramForm& q, Int boxRadius)
{
    std::size_t n = q.dim();
    if (boxRadius < 1)
        throw std::invalid_argument("boxRadius must be positive");

    // Dual view of the lifted lower hull: the cells incident to the lifted
    // origin are the contact sets of the vertices of
    // {x : 2 x^T Q z <= z^T Q z for all nonzero z in the box}.
    std::vector<IntVector> boxPoints;
    IntVector z(n, -boxRadius);
    while (true) {
        if (std::any_of(z.begin(), z.end(), [](Int c) { return c != 0; }))
            boxPoints.push_back(z);
        std::size_t i = 0;
        while (i < n && z[i] == boxRadius)
            z[i++] = -boxRadius;
        if (i == n)
            break;
        ++z[i];
    }

    // Strictly redundant constraints can never be active: if some lattice
    // split z = w + (z - w) has f(w) + f(z - w) < f(z), then
    // 2 x^T Q z < f(z) whenever both smaller constraints hold. Dropping
    // them preserves the polytope and every activity set exactly (equality
    // splits are kept: those z are co-spherical and genuinely active).
    {
        std::vector<IntVector> witnesses;
        IntVector w(n, -1);
        while (true) {
            if (std::any_of(w.begin(), w.end(), [](Int c) { return c != 0; }))
                witnesses.push_back(w);
            std::size_t i = 0;
            while (i < n && w[i] == 1)
                w[i++] = -1;
            if (i == n)
                break;
            ++w[i];
        }
        std::vector<IntVector> kept;
        for (const IntVector& p : boxPoints) {
            Rat fp = evalForm(q, p);
            bool redundant = false;
            for (const IntVector& w2 : witnesses) {
                IntVector rest(n);
                bool restZero = true;
                for (std::size_t i = 0; i < n; ++i) {
                    rest[i] = p[i] - w2[i];
                    restZero = restZero && rest[i] == 0;
                }
                if (restZero)
                    continue;
                if (evalForm(q, w2) + evalForm(q, rest) < fp) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant)
                kept.push_back(p);
        }
        boxPoints = std::move(kept);
    }

    std::vector<std::pair<RatVector, Rat>> ineqs;
    ineqs.reserve(boxPoints.size());
    for (const IntVector& p : boxPoints) {
        RatVector qp = matVec(q.entries, toRat(p));
        for (Rat& c : qp)
            c *= 2;
        ineqs.emplace_back(std::move(qp), evalForm(q, p));
    }

    PolytopeVertices pv = enumeratePolytopeVertices(ineqs);
    DelaunayStar star;
    for (std::size_t vi = 0; vi < pv.vertices.size(); ++vi) {
        DelaunayCell cell;
        cell.center = pv.vertices[vi];
        cell.radiusSq = evalForm(q, cell.center);
        cell.vertices.push_back(IntVector(n, 0));
        for (std::size_t ci : pv.activeSets[vi]) {
            const IntVector& p = boxPoints[ci];
            if (*std::max_element(p.begin(), p.end()) >= boxRadius ||
                *std::min_element(p.begin(), p.end()) <= -boxRadius)
                throw std::runtime_error(
                    "liftingOracle: cell touches the box boundary; "
                    "increase boxRadius");
            cell.vertices.push_back(p);
        }
        std::sort(cell.vertices.begin(), cell.vertices.end());
        star.cells.push_back(std::move(cell));
    }
    std::sort(star.cells.begin(), star.cells.end(),
              [](const DelaunayCell& a, const DelaunayCell& b) {
                  return a.vertices < b.vertices;
              });
    return star;
}

}  // namespace zonelab
