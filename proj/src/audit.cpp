#include "zonelab/audit.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace zonelab {

AuditReport auditTheorem1(const GramForm& q, const std::vector<Rat>& lambdaSamples)
{
    AuditReport report;
    report.form = q;

    DelaunayStar star = delaunayStar(q);
    HPolytope pv = voronoiPolytope(q);
    FacePoset poset = buildFacePoset(pv);
    std::vector<Zone> zoneList = zones(poset);
    SecondaryCone cone = coneOfLType(q, star);
    std::vector<ExtremeRay> rays = extremeRays(cone);

    // Candidate directions from all three sources, so a one-sided bug in
    // any module still gets audited against the other conditions.
    std::set<IntVector> candidates;
    std::map<IntVector, bool> zoneClosed;
    for (const Zone& z : zoneList) {
        IntVector k = zoneFunctional(q, z);
        zoneClosed[k] = z.closed;
        candidates.insert(k);
    }
    for (const IntVector& k : laminaCandidates(star))
        candidates.insert(k);
    for (const ExtremeRay& r : rays)
        if (r.rank1K)
            candidates.insert(*r.rank1K);

    report.counts.rank1Rays =
        std::count_if(rays.begin(), rays.end(),
                      [](const ExtremeRay& r) { return r.rank == 1; });
    report.counts.closedZones =
        std::count_if(zoneList.begin(), zoneList.end(),
                      [](const Zone& z) { return z.closed; });

    bool allConsistent = true;
    for (const IntVector& k : candidates) {
        DirectionReport dir;
        dir.k = k;
        dir.lamina = isLamina(star, k);
        if (auto it = zoneClosed.find(k); it != zoneClosed.end())
            dir.closedZone = it->second;
        dir.extensionInvariant = sampledInvariance(q, k, lambdaSamples);
        dir.extremeRay = rayMembership(rays, rank1Form(q, k));
        if (dir.lamina) {
            // Symbolic certificate for all lambda >= 0, not just samples.
            laminaCertificate(q, star, k);
            dir.contractionLimitValue = contractionLimit(q, star, k);
            ++report.counts.laminaFamilies;
        } else {
            dir.breakingLambdaValue = breakingLambda(q, star, k);
        }
        dir.consistent = dir.lamina == dir.closedZone.value_or(false) &&
                         dir.lamina == dir.extensionInvariant &&
                         dir.lamina == dir.extremeRay;
        allConsistent = allConsistent && dir.consistent;
        report.directions.push_back(std::move(dir));
    }

    report.pass = allConsistent &&
                  report.counts.closedZones == report.counts.laminaFamilies &&
                  report.counts.laminaFamilies == report.counts.rank1Rays;
    return report;
}

CorpusSummary auditCorpus(const std::vector<CorpusEntry>& forms,
                          const std::vector<Rat>& lambdaSamples)
{
    CorpusSummary summary;
    auto start = std::chrono::steady_clock::now();
    summary.allPass = true;
    for (const CorpusEntry& entry : forms) {
        try {
            AuditReport r = auditTheorem1(entry.form, lambdaSamples);
            summary.allPass = summary.allPass && r.pass;
            summary.reports.emplace_back(entry.name, std::move(r));
        } catch (const std::exception& e) {
            summary.errors.emplace_back(entry.name, e.what());
            summary.allPass = false;
        }
    }
    summary.elapsedSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return summary;
}

}  // namespace zonelab
