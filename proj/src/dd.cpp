#include "zonelab/dd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zonelab {

namespace {

// Primitive integer scaling of a ray, direction preserved.
IntVector primitiveRay(const RatVector& d)
{
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
        throw std::invalid_argument("zero ray");
    IntVector out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        mpz_class q = scaled[i] / g;
        if (!q.fits_slong_p())
            throw std::overflow_error("ray coordinate overflow");
        out[i] = q.get_si();
    }
    return out;
}

struct Ray {
    RatVector v;
    std::vector<bool> active;  // over all input rows, filled as processed
};

Rat rowDot(const RatVector& a, const RatVector& r)
{
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * r[i];
    return s;
}

// T subset of active(r), restricted to processed rows.
bool activeSubset(const std::vector<bool>& t, const std::vector<bool>& a,
                  std::size_t upto)
{
    for (std::size_t i = 0; i < upto; ++i)
        if (t[i] && !a[i])
            return false;
    return true;
}

}  // namespace

std::vector<IntVector> extremeRaysOfCone(const std::vector<RatVector>& rows)
{
    if (rows.empty())
        throw std::invalid_argument("no constraint rows");
    std::size_t d = rows[0].size();

    // Greedy choice of d linearly independent rows for the simplicial
    // starting cone.
    std::vector<std::size_t> initial;
    {
        QMat m(0, d);
        for (std::size_t i = 0; i < rows.size() && initial.size() < d; ++i) {
            QMat trial(initial.size() + 1, d);
            for (std::size_t k = 0; k < initial.size(); ++k)
                for (std::size_t j = 0; j < d; ++j)
                    trial.at(k, j) = rows[initial[k]][j];
            for (std::size_t j = 0; j < d; ++j)
                trial.at(initial.size(), j) = rows[i][j];
            if (matRank(trial) == initial.size() + 1)
                initial.push_back(i);
        }
        if (initial.size() != d)
            throw std::runtime_error("cone is not pointed (rows do not span)");
    }

    // Initial rays: columns of the inverse of the chosen rows, so that
    // a_i . r_j = delta_ij.
    std::vector<Ray> rays;
    {
        QMat m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m.at(i, j) = rows[initial[i]][j];
        QMat inv = inverse(m);
        for (std::size_t j = 0; j < d; ++j) {
            Ray r;
            r.v.resize(d);
            for (std::size_t i = 0; i < d; ++i)
                r.v[i] = inv.at(i, j);
            r.v = toRat(primitiveRay(r.v));
            r.active.assign(rows.size(), false);
            rays.push_back(std::move(r));
        }
    }

    // The initial rows bound the cone from the start, so they count as
    // processed immediately; the adjacency test below needs their activity
    // recorded, or the zero-set description of the cone is incomplete.
    std::vector<bool> processed(rows.size(), false);
    auto markActivity = [&](Ray& r, std::size_t rowIdx) {
        r.active[rowIdx] = (rowDot(rows[rowIdx], r.v) == 0);
    };
    for (std::size_t i : initial) {
        processed[i] = true;
        for (Ray& r : rays)
            markActivity(r, i);
    }

    for (std::size_t rowIdx = 0; rowIdx < rows.size(); ++rowIdx) {
        if (processed[rowIdx])
            continue;
        const RatVector& a = rows[rowIdx];
        std::vector<Rat> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = rowDot(a, rays[i].v);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
        }

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (val[i] >= 0)
                next.push_back(rays[i]);

        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                // Combinatorial adjacency: no third extreme ray is active on
                // every constraint that both p and n are active on.
                std::vector<bool> common(rows.size(), false);
                for (std::size_t i = 0; i < rows.size(); ++i)
                    common[i] = rays[p].active[i] && rays[n].active[i];
                bool adjacent = true;
                for (std::size_t i = 0; i < rays.size(); ++i) {
                    if (i == p || i == n)
                        continue;
                    if (activeSubset(common, rays[i].active, rows.size())) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent)
                    continue;
                Ray fresh;
                fresh.v.resize(d);
                for (std::size_t j = 0; j < d; ++j)
                    fresh.v[j] = val[p] * rays[n].v[j] - val[n] * rays[p].v[j];
                fresh.v = toRat(primitiveRay(fresh.v));
                fresh.active.assign(rows.size(), false);
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (processed[i])
                        fresh.active[i] = (rowDot(rows[i], fresh.v) == 0);
                fresh.active[rowIdx] = true;
                next.push_back(std::move(fresh));
            }
        }

        rays = std::move(next);
        processed[rowIdx] = true;
        for (Ray& r : rays)
            markActivity(r, rowIdx);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (const Ray& r : rays) {
        IntVector g = primitiveRay(r.v);
        for (const RatVector& row : rows)
            if (rowDot(row, toRat(g)) < 0)
                throw std::runtime_error("double description produced an infeasible ray");
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PolytopeVertices enumeratePolytopeVertices(
    const std::vector<std::pair<RatVector, Rat>>& inequalities)
{
    if (inequalities.empty())
        throw std::invalid_argument("no inequalities");
    std::size_t n = inequalities[0].first.size();

    // Homogenize: a.x <= b t, t >= 0 as rows of a pointed cone in R^{n+1}.
    std::vector<RatVector> rows;
    rows.reserve(inequalities.size() + 1);
    for (const auto& [a, b] : inequalities) {
        RatVector row(n + 1);
        row[0] = b;
        for (std::size_t j = 0; j < n; ++j)
            row[j + 1] = -a[j];
        rows.push_back(std::move(row));
    }
    {
        RatVector tRow(n + 1, Rat(0));
        tRow[0] = 1;
        rows.push_back(std::move(tRow));
    }

    PolytopeVertices result;
    for (const IntVector& ray : extremeRaysOfCone(rows)) {
        if (ray[0] == 0)
            throw std::runtime_error("polytope is unbounded");
        RatVector x(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = Rat(ray[j + 1], ray[0]);
            x[j].canonicalize();
        }
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < inequalities.size(); ++i)
            if (dot(inequalities[i].first, x) == inequalities[i].second)
                active.push_back(i);
        result.vertices.push_back(std::move(x));
        result.activeSets.push_back(std::move(active));
    }
    return result;
}

}  // namespace zonelab
