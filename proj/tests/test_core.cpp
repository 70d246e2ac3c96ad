#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zonelab/core.hpp"

#include <random>

using namespace zonelab;

namespace {

GramForm makeForm(std::vector<std::vector<long>> rows)
{
    QMat m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = rows[i][j];
    return GramForm::fromMatrix(std::move(m));
}

const GramForm kA2 = makeForm({{2, 1}, {1, 2}});

}  // namespace

TEST_CASE("rational text round trip")
{
    CHECK(ratToString(Rat(1, 2)) == "1/2");
    CHECK(ratToString(Rat(-3)) == "-3");
    CHECK(ratFromString("7/3") == Rat(7, 3));
    CHECK(ratFromString("-4/8") == Rat(-1, 2));
    CHECK(ratFromString("5") == Rat(5));
    CHECK_THROWS(ratFromString(""));
    CHECK_THROWS(ratFromString("x"));
}

TEST_CASE("evalForm")
{
    GramForm id2 = GramForm::identity(2);
    CHECK(evalForm(id2, IntVector{1, 0}) == 1);
    CHECK(evalForm(kA2, IntVector{1, -1}) == 2);
    CHECK(evalForm(kA2, IntVector{1, 1}) == 6);
    CHECK_THROWS(evalForm(id2, IntVector{1, 0, 0}));
}

TEST_CASE("innerQ")
{
    GramForm id2 = GramForm::identity(2);
    CHECK(innerQ(id2, RatVector{1, 0}, RatVector{0, 1}) == 0);
    CHECK(innerQ(kA2, RatVector{1, 0}, RatVector{0, 1}) == 1);
    CHECK(innerQ(kA2, RatVector{1, 1}, RatVector{1, -1}) == 0);
    CHECK(innerQ(kA2, RatVector{1, -1}, RatVector{1, -1}) ==
          evalForm(kA2, IntVector{1, -1}));
}

TEST_CASE("isPositiveDefinite")
{
    CHECK(isPositiveDefinite(GramForm::identity(3).entries));
    QMat rank1(2, 2);
    rank1.at(0, 0) = 1;
    rank1.at(0, 1) = 1;
    rank1.at(1, 0) = 1;
    rank1.at(1, 1) = 1;
    CHECK_FALSE(isPositiveDefinite(rank1));
    CHECK(isPositiveDefinite(kA2.entries));
    QMat asym(2, 2);
    asym.at(0, 1) = 1;
    CHECK_THROWS(isPositiveDefinite(asym));
}

TEST_CASE("circumcenter")
{
    GramForm id2 = GramForm::identity(2);
    auto s = circumcenter(id2, {{1, 0}, {0, 1}});
    CHECK(s.center == RatVector{Rat(1, 2), Rat(1, 2)});
    CHECK(s.radiusSq == Rat(1, 2));

    auto sa = circumcenter(kA2, {{1, 0}, {0, 1}});
    CHECK(sa.center == RatVector{Rat(1, 3), Rat(1, 3)});
    CHECK(sa.radiusSq == Rat(2, 3));

    GramForm id3 = GramForm::identity(3);
    auto s3 = circumcenter(id3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(s3.center == RatVector{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK(s3.radiusSq == Rat(3, 4));

    CHECK_THROWS(circumcenter(id2, {{1, 0}, {2, 0}}));

    // Postcondition: every defining vector is at exact distance r^2.
    for (const IntVector& v : std::vector<IntVector>{{1, 0}, {0, 1}})
        CHECK(evalForm(kA2, subtract(toRat(v), sa.center)) == sa.radiusSq);
}

TEST_CASE("emptyMargin")
{
    GramForm id2 = GramForm::identity(2);
    std::vector<IntVector> basis{{1, 0}, {0, 1}};
    CHECK(emptyMargin(id2, basis, {1, 1}) == 0);
    CHECK(emptyMargin(id2, basis, {2, 0}) == 2);
    CHECK(emptyMargin(kA2, basis, {1, 1}) == 2);
    CHECK_THROWS(emptyMargin(id2, {{1, 0}, {2, 0}}, {1, 1}));
}

TEST_CASE("margin sign agrees with circumcenter distance on random input")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coord(-5, 5);
    int done = 0;
    while (done < 250) {
        std::size_t n = 2 + (rng() % 2);
        // Random positive definite Q = M^T M + I with small integer M.
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = coord(rng);
        QMat qm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k)
                    qm.at(i, j) += m.at(k, i) * m.at(k, j);
                if (i == j)
                    qm.at(i, j) += 1;
            }
        GramForm q = GramForm::fromMatrix(qm);

        std::vector<IntVector> basis;
        QMat bm(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            IntVector v(n);
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = coord(rng);
                bm.at(i, j) = v[j];
            }
            basis.push_back(std::move(v));
        }
        if (matRank(bm) != n)
            continue;
        IntVector u(n);
        for (std::size_t j = 0; j < n; ++j)
            u[j] = coord(rng);

        Rat margin = emptyMargin(q, basis, u);
        auto s = circumcenter(q, basis);
        Rat dist = evalForm(q, subtract(toRat(u), s.center)) - s.radiusSq;
        CHECK(sgn(margin) == sgn(dist));
        ++done;
    }
}
