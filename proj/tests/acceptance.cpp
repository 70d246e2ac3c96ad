// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include "zonelab/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace zonelab;

namespace {

int g_failures = 0;

void report(int id, const std::string& what, bool ok)
{
    std::cout << "criterion " << id << " (" << what << "): "
              << (ok ? "PASS" : "FAIL") << std::endl;
    if (!ok)
        ++g_failures;
}

std::vector<FormFile> loadCorpus()
{
    std::vector<FormFile> out;
    for (const char* name : {"z2", "a2", "z3", "fcc", "bcc", "z4", "d4"})
        out.push_back(parseFormFile(std::string(CORPUS_DIR) + "/" + name +
                                    ".json"));
    return out;
}

Rat randomRat(std::mt19937& rng, long maxNum, long den)
{
    std::uniform_int_distribution<long> num(-maxNum, maxNum);
    Rat r(num(rng), den);
    r.canonicalize();
    return r;
}

// Symmetric rational perturbation of every entry, magnitude <= maxNum/den.
GramForm perturb(const GramForm& q, std::mt19937& rng, long maxNum, long den)
{
    QMat m = q.entries;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i; j < m.cols; ++j) {
            Rat d = randomRat(rng, maxNum, den);
            m.at(i, j) += d;
            if (j != i)
                m.at(j, i) += d;
        }
    return GramForm::fromMatrix(std::move(m));
}

std::set<IntVector> laminaSet(const DelaunayStar& star)
{
    std::set<IntVector> out;
    for (const IntVector& k : laminaCandidates(star))
        if (isLamina(star, k))
            out.insert(k);
    return out;
}

// 1. Empty-sphere margin sign agrees with the direct circumcenter
//    distance comparison on randomized exact instances.
void criterion1()
{
    std::mt19937 rng(20260824);
    std::uniform_int_distribution<long> coord(-5, 5);
    std::uniform_int_distribution<long> bentry(-3, 3);
    std::size_t done = 0;
    bool ok = true;
    while (done < 1000) {
        std::size_t n = 2 + (done % 2);
        // Random positive definite form B^T B.
        QMat b(n, n);
        for (Rat& c : b.data)
            c = bentry(rng);
        if (determinant(b) == 0)
            continue;
        QMat g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t r = 0; r < n; ++r)
                    g.at(i, j) += b.at(r, i) * b.at(r, j);
        GramForm q = GramForm::fromMatrix(std::move(g));

        std::vector<IntVector> basis(n, IntVector(n));
        QMat bm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                basis[i][j] = coord(rng);
                bm.at(i, j) = basis[i][j];
            }
        if (determinant(bm) == 0)
            continue;
        IntVector u(n);
        for (long& c : u)
            c = coord(rng);

        Sphere s = circumcenter(q, basis);
        Rat direct = evalForm(q, subtract(toRat(u), s.center)) - s.radiusSq;
        if (sgn(emptyMargin(q, basis, u)) != sgn(direct))
            ok = false;
        ++done;
    }
    report(1, "margin sign vs circumcenter oracle, 1000 cases", ok);
}

// 2. The combinatorial star from coset minima equals the one read off the
//    lifted polytope, on the corpus and on perturbed instances.
void criterion2(const std::vector<FormFile>& corpus)
{
    bool ok = true;
    for (const FormFile& f : corpus) {
        if (fingerprint(delaunayStar(f.form)) !=
            fingerprint(liftingOracle(f.form, 3)))
            ok = false;
    }
    std::mt19937 rng(17);
    const GramForm& bcc = corpus[4].form;
    for (int t = 0; t < 20; ++t) {
        GramForm p = perturb(bcc, rng, 16, 128);  // |delta| <= 1/8
        if (fingerprint(delaunayStar(p)) != fingerprint(liftingOracle(p, 2)))
            ok = false;
    }
    report(2, "star equals lifting oracle, corpus + 20 perturbations", ok);
}

// 3. Voronoi vertices are exactly the star-cell circumcenters.
void criterion3(const std::vector<FormFile>& corpus)
{
    bool ok = true;
    for (const FormFile& f : corpus) {
        DelaunayStar star = delaunayStar(f.form);
        auto verts = enumerateVertices(voronoiPolytope(f.form));
        if (verts.size() != star.cells.size())
            ok = false;
        std::set<RatVector> vs(verts.begin(), verts.end());
        for (const DelaunayCell& cell : star.cells)
            if (!vs.count(cell.center))
                ok = false;
    }
    report(3, "Voronoi vertex / Delaunay cell duality on corpus", ok);
}

// 4. The four-way equivalence audit passes with the expected counts.
void criterion4(const std::vector<FormFile>& corpus)
{
    std::map<std::string, std::size_t> expected{
        {"z2", 2}, {"a2", 3}, {"z3", 3}, {"fcc", 4},
        {"bcc", 6}, {"z4", 4}, {"d4", 0}};
    std::vector<std::string> keys{"z2", "a2", "z3", "fcc", "bcc", "z4", "d4"};
    bool ok = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        AuditReport r = auditTheorem1(corpus[i].form);
        std::size_t want = expected.at(keys[i]);
        if (!r.pass || r.counts.closedZones != want ||
            r.counts.laminaFamilies != want || r.counts.rank1Rays != want)
            ok = false;
    }
    report(4, "equivalence audit with expected counts on corpus", ok);
}

// 5. Exact breaking threshold for the hexagonal form across (1,-1).
void criterion5()
{
    QMat m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(1, 1) = 2;
    GramForm a2 = GramForm::fromMatrix(std::move(m));
    DelaunayStar star = delaunayStar(a2);
    IntVector k{1, -1};
    bool ok = breakingLambda(a2, star, k) == 2;
    std::string base = fingerprint(star);
    ok = ok && fingerprint(delaunayStar(extendForm(a2, k, Rat(15, 8)))) == base;
    ok = ok && fingerprint(delaunayStar(extendForm(a2, k, Rat(17, 8)))) != base;
    report(5, "breaking lambda = 2 with 15/8 vs 17/8 fingerprints", ok);
}

// 6. Every lamina certificate is exact: slopes >= 0, and witnesses on the
//    sphere have slope exactly 0.
void criterion6(const std::vector<FormFile>& corpus)
{
    bool ok = true;
    for (const FormFile& f : corpus) {
        DelaunayStar star = delaunayStar(f.form);
        for (const IntVector& k : laminaSet(star))
            for (const MarginLine& ml : laminaCertificate(f.form, star, k)) {
                if (ml.slope < 0)
                    ok = false;
                if (ml.base == 0 && ml.slope != 0)
                    ok = false;
            }
    }
    report(6, "lamina certificates exact on corpus", ok);
}

// 7. Low-dimensional corpus forms are dicings; the 24-cell form is not.
void criterion7(const std::vector<FormFile>& corpus)
{
    bool ok = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const FormFile& f = corpus[i];
        if (f.dim > 3 && i != corpus.size() - 1)
            continue;  // z4 not constrained here, d4 is last
        auto rays = extremeRays(coneOfLType(f.form, delaunayStar(f.form)));
        bool dicing = isDicing(rays);
        if (i == corpus.size() - 1) {
            if (dicing || rays.size() != 1 || rays[0].rank != 4)
                ok = false;
        } else if (f.dim <= 3 && !dicing) {
            ok = false;
        }
    }
    report(7, "dicing for n <= 3 corpus forms, single rank 4 ray for d4", ok);
}

// 8. Small perturbations that keep the subdivision keep the lamina set.
void criterion8(const std::vector<FormFile>& corpus)
{
    const GramForm& bcc = corpus[4].form;
    DelaunayStar star = delaunayStar(bcc);
    std::string base = fingerprint(star);
    std::set<IntVector> baseLaminae = laminaSet(star);
    std::mt19937 rng(99);
    bool ok = true;
    std::size_t unchanged = 0;
    for (int t = 0; t < 20; ++t) {
        GramForm p = perturb(bcc, rng, 8, 128);  // |delta| <= 1/16
        DelaunayStar pstar = delaunayStar(p);
        if (fingerprint(pstar) != base)
            continue;
        ++unchanged;
        if (laminaSet(pstar) != baseLaminae)
            ok = false;
    }
    ok = ok && unchanged > 0;
    report(8, "subdivision-preserving perturbations preserve lamina set", ok);
}

// 9. Repeated CLI runs over the corpus produce byte-identical reports.
void criterion9()
{
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path();
    fs::path out1 = tmp / "zonelab_audit_run1.json";
    fs::path out2 = tmp / "zonelab_audit_run2.json";
    std::string base = std::string("\"") + ZONELAB_BIN + "\" audit --corpus \"" +
                       CORPUS_DIR + "\" --out ";
    int rc1 = std::system((base + "\"" + out1.string() + "\"").c_str());
    int rc2 = std::system((base + "\"" + out2.string() + "\"").c_str());
    bool ok = rc1 == 0 && rc2 == 0;
    if (ok) {
        std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        ok = !s1.str().empty() && s1.str() == s2.str();
    }
    report(9, "CLI corpus audit is byte-deterministic", ok);
}

}  // namespace

int main()
{
    try {
        std::vector<FormFile> corpus = loadCorpus();
        criterion1();
        criterion2(corpus);
        criterion3(corpus);
        criterion4(corpus);
        criterion5();
        criterion6(corpus);
        criterion7(corpus);
        criterion8(corpus);
        criterion9();
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << std::endl;
        return 1;
    }
    return g_failures == 0 ? 0 : 1;
}
