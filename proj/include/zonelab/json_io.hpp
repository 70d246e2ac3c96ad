#ifndef ZONELAB_JSON_IO_HPP
#define ZONELAB_JSON_IO_HPP

#include "zonelab/audit.hpp"
#include "zonelab/cone.hpp"
#include "zonelab/core.hpp"
#include "zonelab/delaunay.hpp"
#include "zonelab/lamina.hpp"
#include "zonelab/voronoi.hpp"

#include "json.hpp"

#include <string>

namespace zonelab {

using Json = nlohmann::ordered_json;

// {"dim": n, "gram": [["p/q", ...], ...], "name": optional}
struct FormFile {
    std::size_t dim = 0;
    GramForm form;
    std::string name;
};

FormFile parseFormFile(const std::string& path);
FormFile parseFormJson(const Json& j);

// Canonical serialization; parse-then-serialize is byte-stable.
Json formToJson(const FormFile& f);

Json starToJson(const DelaunayStar& star);
Json posetToJson(const FacePoset& poset, const std::vector<Zone>& zoneList);
Json zonesToJson(const GramForm& q, const std::vector<Zone>& zoneList);
Json laminaReportToJson(const GramForm& q, const DelaunayStar& star,
                        const IntVector& k);
Json coneToJson(const SecondaryCone& cone, const std::vector<ExtremeRay>& rays);
Json auditReportToJson(const AuditReport& report);
Json corpusSummaryToJson(const CorpusSummary& summary);

Json matrixToJson(const QMat& m);
Json ratVectorToJson(const RatVector& v);

}  // namespace zonelab

#endif
