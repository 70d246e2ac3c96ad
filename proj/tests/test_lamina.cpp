#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zonelab/lamina.hpp"

#include <algorithm>
#include <random>
#include <set>

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

TEST_CASE("laminaCandidates")
{
    auto cand = laminaCandidates(delaunayStar(GramForm::identity(2)));
    std::set<IntVector> cs(cand.begin(), cand.end());
    CHECK(cs.count(IntVector{1, 0}));
    CHECK(cs.count(IntVector{0, 1}));
    CHECK(cs.count(IntVector{1, 1}));
    CHECK(cs.count(IntVector{1, -1}));

    auto candA2 = laminaCandidates(delaunayStar(kA2));
    std::set<IntVector> ca(candA2.begin(), candA2.end());
    CHECK(ca.count(IntVector{1, 0}));
    CHECK(ca.count(IntVector{0, 1}));
    CHECK(ca.count(IntVector{1, 1}));
}

TEST_CASE("isLamina")
{
    DelaunayStar sq = delaunayStar(GramForm::identity(2));
    CHECK(isLamina(sq, IntVector{1, 0}));
    CHECK(isLamina(sq, IntVector{0, 1}));
    CHECK_FALSE(isLamina(sq, IntVector{1, 1}));
    CHECK_FALSE(isLamina(sq, IntVector{1, -1}));

    DelaunayStar hex = delaunayStar(kA2);
    CHECK(isLamina(hex, IntVector{1, 0}));
    CHECK(isLamina(hex, IntVector{0, 1}));
    CHECK(isLamina(hex, IntVector{1, 1}));
    CHECK_FALSE(isLamina(hex, IntVector{1, -1}));

    // Non-primitive directions are rejected.
    CHECK_THROWS(isLamina(sq, IntVector{2, 0}));
}

TEST_CASE("alphaSquared")
{
    // Q^{-1} = (1/3)[[2,-1],[-1,2]] for A2.
    CHECK(alphaSquared(kA2, IntVector{1, 1}) == Rat(3, 2));
    CHECK(alphaSquared(kA2, IntVector{1, -1}) == Rat(1, 2));
    CHECK(alphaSquared(GramForm::identity(2), IntVector{1, 0}) == 1);
    CHECK(alphaSquared(GramForm::identity(2), IntVector{1, 1}) == Rat(1, 2));
}

TEST_CASE("rank1Form")
{
    Rank1Form f = rank1Form(kA2, IntVector{1, -1});
    CHECK(f.alphaSq == Rat(1, 2));
    CHECK(f.matrix.at(0, 0) == Rat(1, 2));
    CHECK(f.matrix.at(0, 1) == Rat(-1, 2));
    CHECK(f.matrix.at(1, 1) == Rat(1, 2));
}

TEST_CASE("extendForm")
{
    GramForm e = extendForm(kA2, IntVector{1, -1}, Rat(2));
    CHECK(e.entries.at(0, 0) == 3);
    CHECK(e.entries.at(0, 1) == 0);
    CHECK(e.entries.at(1, 1) == 3);

    // Contracting to the positive-definiteness limit throws.
    CHECK_THROWS(extendForm(kA2, IntVector{1, 1}, Rat(-1)));
    CHECK_THROWS(extendForm(kA2, IntVector{1, 1}, Rat(-3, 2)));

    // The extension only changes norms through the (k.x) component.
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coord(-4, 4);
    GramForm g = extendForm(kA2, IntVector{1, 1}, Rat(5, 3));
    Rat shift = Rat(5, 3) * alphaSquared(kA2, IntVector{1, 1});
    for (int t = 0; t < 100; ++t) {
        IntVector x{coord(rng), coord(rng)};
        Rat kx = Rat(x[0] + x[1]);
        CHECK(evalForm(g, x) == evalForm(kA2, x) + shift * kx * kx);
    }
}

TEST_CASE("laminaCertificate")
{
    DelaunayStar hex = delaunayStar(kA2);
    auto lines = laminaCertificate(kA2, hex, IntVector{1, 1});
    CHECK(!lines.empty());
    bool sawPositiveSlope = false;
    for (const MarginLine& ml : lines) {
        CHECK(ml.base >= 0);
        CHECK(ml.slope >= 0);
        if (ml.base == 0)
            CHECK(ml.slope == 0);
        if (ml.slope > 0)
            sawPositiveSlope = true;
    }
    CHECK(sawPositiveSlope);

    // Not a lamina direction: no certificate.
    CHECK_THROWS(laminaCertificate(kA2, hex, IntVector{1, -1}));
}

TEST_CASE("sampledInvariance")
{
    CHECK(sampledInvariance(kA2, IntVector{1, 1},
                            {Rat(1, 4), Rat(1), Rat(4)}));
    CHECK(sampledInvariance(kA2, IntVector{1, -1}, {Rat(1)}));
    CHECK_FALSE(sampledInvariance(kA2, IntVector{1, -1}, {Rat(4)}));
    CHECK_FALSE(sampledInvariance(GramForm::identity(2), IntVector{1, 1},
                                  {Rat(1, 4)}));
}

TEST_CASE("breakingLambda")
{
    DelaunayStar hex = delaunayStar(kA2);
    Rat lam = breakingLambda(kA2, hex, IntVector{1, -1});
    CHECK(lam == 2);

    // The subdivision survives just below the threshold and changes just
    // above it.
    std::string base = fingerprint(hex);
    GramForm below = extendForm(kA2, IntVector{1, -1}, Rat(15, 8));
    GramForm above = extendForm(kA2, IntVector{1, -1}, Rat(17, 8));
    CHECK(fingerprint(delaunayStar(below)) == base);
    CHECK(fingerprint(delaunayStar(above)) != base);

    // Degenerate stars break immediately.
    GramForm id2 = GramForm::identity(2);
    CHECK(breakingLambda(id2, delaunayStar(id2), IntVector{1, 1}) == 0);
    GramForm id3 = GramForm::identity(3);
    CHECK(breakingLambda(id3, delaunayStar(id3), IntVector{1, 1, 0}) == 0);
}

TEST_CASE("contractionLimit")
{
    GramForm id2 = GramForm::identity(2);
    CHECK(contractionLimit(id2, delaunayStar(id2), IntVector{1, 0}) == -1);

    DelaunayStar hex = delaunayStar(kA2);
    Rat lim = contractionLimit(kA2, hex, IntVector{1, 1});
    CHECK(lim == Rat(-2, 3));
    // At the limit the hexagon collapses onto the square lattice form.
    GramForm atLimit = extendForm(kA2, IntVector{1, 1}, lim);
    CHECK(atLimit.entries == GramForm::identity(2).entries);
    CHECK(fingerprint(delaunayStar(atLimit)) != fingerprint(hex));
    // Strictly inside the limit the subdivision is unchanged.
    GramForm inside = extendForm(kA2, IntVector{1, 1}, Rat(-1, 2));
    CHECK(fingerprint(delaunayStar(inside)) == fingerprint(hex));
}
