#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zonelab/audit.hpp"

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
const GramForm kD4 = makeForm(
    {{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}});

}  // namespace

TEST_CASE("audit of the hexagonal form")
{
    AuditReport report = auditTheorem1(kA2);
    CHECK(report.pass);
    CHECK(report.counts.closedZones == 3);
    CHECK(report.counts.laminaFamilies == 3);
    CHECK(report.counts.rank1Rays == 3);

    std::set<IntVector> laminae;
    for (const DirectionReport& d : report.directions) {
        CHECK(d.consistent);
        if (d.lamina) {
            laminae.insert(d.k);
            REQUIRE(d.closedZone);
            CHECK(*d.closedZone);
            CHECK(d.extensionInvariant);
            CHECK(d.extremeRay);
            REQUIRE(d.contractionLimitValue);
            CHECK(*d.contractionLimitValue < 0);
            CHECK(*d.contractionLimitValue >= -1);
        } else {
            CHECK_FALSE(d.extensionInvariant);
            CHECK_FALSE(d.extremeRay);
            REQUIRE(d.breakingLambdaValue);
            CHECK(*d.breakingLambdaValue >= 0);
        }
    }
    CHECK(laminae ==
          std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("audit of the square and cubic forms")
{
    AuditReport sq = auditTheorem1(GramForm::identity(2));
    CHECK(sq.pass);
    CHECK(sq.counts.closedZones == 2);
    CHECK(sq.counts.laminaFamilies == 2);
    CHECK(sq.counts.rank1Rays == 2);

    AuditReport cube = auditTheorem1(GramForm::identity(3));
    CHECK(cube.pass);
    CHECK(cube.counts.closedZones == 3);
    CHECK(cube.counts.laminaFamilies == 3);
    CHECK(cube.counts.rank1Rays == 3);
}

TEST_CASE("audit of the 24-cell form finds nothing")
{
    AuditReport report = auditTheorem1(kD4);
    CHECK(report.pass);
    CHECK(report.counts.closedZones == 0);
    CHECK(report.counts.laminaFamilies == 0);
    CHECK(report.counts.rank1Rays == 0);
    for (const DirectionReport& d : report.directions) {
        CHECK(d.consistent);
        CHECK_FALSE(d.lamina);
    }
}

TEST_CASE("auditCorpus")
{
    std::vector<CorpusEntry> entries;
    entries.push_back({"square", GramForm::identity(2)});
    entries.push_back({"hexagonal", kA2});
    CorpusSummary summary = auditCorpus(entries);
    CHECK(summary.allPass);
    CHECK(summary.errors.empty());
    REQUIRE(summary.reports.size() == 2);
    CHECK(summary.reports[0].first == "square");
    CHECK(summary.reports[1].first == "hexagonal");
    CHECK(summary.reports[1].second.counts.laminaFamilies == 3);
}
