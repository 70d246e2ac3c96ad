#ifndef ZONELAB_AUDIT_HPP
#define ZONELAB_AUDIT_HPP

#include "zonelab/cone.hpp"
#include "zonelab/core.hpp"
#include "zonelab/lamina.hpp"
#include "zonelab/voronoi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zonelab {

// The four equivalent conditions, evaluated independently for one
// candidate direction.
struct DirectionReport {
    IntVector k;
    bool lamina = false;
    std::optional<bool> closedZone;  // empty: no zone in this direction
    bool extensionInvariant = false;
    bool extremeRay = false;
    bool consistent = false;
    std::optional<Rat> breakingLambdaValue;   // non-lamina directions
    std::optional<Rat> contractionLimitValue; // lamina directions
};

struct AuditCounts {
    std::size_t closedZones = 0;
    std::size_t laminaFamilies = 0;
    std::size_t rank1Rays = 0;
};

struct AuditReport {
    GramForm form;
    std::vector<DirectionReport> directions;
    AuditCounts counts;
    bool pass = false;
};

AuditReport auditTheorem1(const GramForm& q,
                          const std::vector<Rat>& lambdaSamples = {
                              Rat(1, 4), Rat(1), Rat(4)});

struct CorpusEntry {
    std::string name;
    GramForm form;
};

struct CorpusSummary {
    std::vector<std::pair<std::string, AuditReport>> reports;
    std::vector<std::pair<std::string, std::string>> errors;
    bool allPass = false;
    double elapsedSeconds = 0;
};

CorpusSummary auditCorpus(const std::vector<CorpusEntry>& forms,
                          const std::vector<Rat>& lambdaSamples = {
                              Rat(1, 4), Rat(1), Rat(4)});

}  // namespace zonelab

#endif
