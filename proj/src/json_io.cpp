#include "zonelab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace zonelab {

namespace {

Json intVectorToJson(const IntVector& v)
{
    Json a = Json::array();
    for (Int c : v)
        a.push_back(c);
    return a;
}

}  // namespace

Json ratVectorToJson(const RatVector& v)
{
    Json a = Json::array();
    for (const Rat& c : v)
        a.push_back(ratToString(c));
    return a;
}

Json matrixToJson(const QMat& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j)
            row.push_back(ratToString(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

FormFile parseFormJson(const Json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("form file: expected a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw std::invalid_argument("form file: missing or invalid 'dim'");
    if (!j.contains("gram") || !j["gram"].is_array())
        throw std::invalid_argument("form file: missing or invalid 'gram'");

    FormFile f;
    f.dim = j["dim"].get<std::size_t>();
    if (f.dim == 0)
        throw std::invalid_argument("form file: 'dim' must be positive");
    const Json& gram = j["gram"];
    if (gram.size() != f.dim)
        throw std::invalid_argument("form file: 'gram' row count != dim");

    QMat m(f.dim, f.dim);
    for (std::size_t i = 0; i < f.dim; ++i) {
        if (!gram[i].is_array() || gram[i].size() != f.dim)
            throw std::invalid_argument("form file: ragged 'gram' row " +
                                        std::to_string(i));
        for (std::size_t jx = 0; jx < f.dim; ++jx) {
            const Json& cell = gram[i][jx];
            if (!cell.is_string())
                throw std::invalid_argument(
                    "form file: 'gram' entries must be rational strings");
            m.at(i, jx) = ratFromString(cell.get<std::string>());
        }
    }
    if (!isSymmetric(m))
        throw std::invalid_argument("form file: 'gram' is not symmetric");
    if (!isPositiveDefinite(m))
        throw std::invalid_argument("form file: 'gram' is not positive definite");
    f.form = GramForm{std::move(m)};
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw std::invalid_argument("form file: 'name' must be a string");
        f.name = j["name"].get<std::string>();
    }
    return f;
}

FormFile parseFormFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open form file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("form file " + path + ": " + e.what());
    }
    return parseFormJson(j);
}

Json formToJson(const FormFile& f)
{
    Json j;
    j["dim"] = f.dim;
    j["gram"] = matrixToJson(f.form.entries);
    if (!f.name.empty())
        j["name"] = f.name;
    return j;
}

Json starToJson(const DelaunayStar& star)
{
    Json cells = Json::array();
    for (const DelaunayCell& cell : star.cells) {
        Json c;
        Json verts = Json::array();
        for (const IntVector& v : cell.vertices)
            verts.push_back(intVectorToJson(v));
        c["vertices"] = std::move(verts);
        c["center"] = ratVectorToJson(cell.center);
        c["radiusSq"] = ratToString(cell.radiusSq);
        cells.push_back(std::move(c));
    }
    Json j;
    j["cells"] = std::move(cells);
    j["fingerprint"] = fingerprint(star);
    return j;
}

Json zonesToJson(const GramForm& q, const std::vector<Zone>& zoneList)
{
    Json arr = Json::array();
    for (const Zone& z : zoneList) {
        Json jz;
        jz["direction"] = intVectorToJson(z.direction);
        jz["functional"] = intVectorToJson(zoneFunctional(q, z));
        jz["edges"] = z.edgeIds;
        jz["closed"] = z.closed;
        arr.push_back(std::move(jz));
    }
    return arr;
}

Json posetToJson(const FacePoset& poset, const std::vector<Zone>& zoneList)
{
    Json j;
    Json verts = Json::array();
    for (const RatVector& v : poset.vertices)
        verts.push_back(ratVectorToJson(v));
    j["vertices"] = std::move(verts);
    Json faces = Json::array();
    for (std::size_t d = 0; d < poset.dim; ++d) {
        Json level = Json::array();
        for (const Face& f : poset.faces[d]) {
            Json jf;
            jf["dim"] = f.dim;
            jf["vertexSet"] = f.vertexSet;
            jf["activeInequalities"] = f.activeInequalities;
            level.push_back(std::move(jf));
        }
        faces.push_back(std::move(level));
    }
    j["faces"] = std::move(faces);
    j["fVector"] = poset.fVector();
    return j;
}

Json laminaReportToJson(const GramForm& q, const DelaunayStar& star,
                        const IntVector& k)
{
    Json j;
    j["k"] = intVectorToJson(k);
    bool lam = isLamina(star, k);
    j["isLamina"] = lam;
    j["alphaSq"] = ratToString(alphaSquared(q, k));
    if (lam)
        j["contractionLimit"] = ratToString(contractionLimit(q, star, k));
    else
        j["breakingLambda"] = ratToString(breakingLambda(q, star, k));
    return j;
}

Json coneToJson(const SecondaryCone& cone, const std::vector<ExtremeRay>& rays)
{
    Json j;
    j["ambientDim"] = cone.ambientDim;
    j["dimension"] = coneDimension(cone);
    Json eqs = Json::array();
    for (const FormFunctional& f : cone.equalities)
        eqs.push_back(matrixToJson(f.coeffs));
    j["equalities"] = std::move(eqs);
    Json ineqs = Json::array();
    for (const FormFunctional& f : cone.inequalities)
        ineqs.push_back(matrixToJson(f.coeffs));
    j["inequalities"] = std::move(ineqs);
    Json jrays = Json::array();
    for (const ExtremeRay& r : rays) {
        Json jr;
        Json gen = Json::array();
        for (std::size_t i = 0; i < r.generator.rows; ++i) {
            Json row = Json::array();
            for (std::size_t c = 0; c < r.generator.cols; ++c)
                row.push_back(r.generator.at(i, c).get_num().get_si());
            gen.push_back(std::move(row));
        }
        jr["generator"] = std::move(gen);
        jr["rank"] = r.rank;
        if (r.rank1K)
            jr["k"] = intVectorToJson(*r.rank1K);
        jrays.push_back(std::move(jr));
    }
    j["rays"] = std::move(jrays);
    j["dicing"] = isDicing(rays);
    return j;
}

Json auditReportToJson(const AuditReport& report)
{
    Json j;
    Json dirs = Json::array();
    for (const DirectionReport& d : report.directions) {
        Json jd;
        jd["k"] = intVectorToJson(d.k);
        jd["lamina"] = d.lamina;
        if (d.closedZone)
            jd["closedZone"] = *d.closedZone;
        else
            jd["closedZone"] = "no zone in this direction";
        jd["extensionInvariant"] = d.extensionInvariant;
        jd["extremeRay"] = d.extremeRay;
        jd["consistent"] = d.consistent;
        if (d.breakingLambdaValue)
            jd["breakingLambda"] = ratToString(*d.breakingLambdaValue);
        if (d.contractionLimitValue)
            jd["contractionLimit"] = ratToString(*d.contractionLimitValue);
        dirs.push_back(std::move(jd));
    }
    j["directions"] = std::move(dirs);
    j["counts"] = Json{{"closedZones", report.counts.closedZones},
                       {"laminaFamilies", report.counts.laminaFamilies},
                       {"rank1Rays", report.counts.rank1Rays}};
    j["pass"] = report.pass;
    return j;
}

Json corpusSummaryToJson(const CorpusSummary& summary)
{
    Json j;
    Json forms = Json::array();
    for (const auto& [name, report] : summary.reports) {
        Json f;
        f["name"] = name;
        f["report"] = auditReportToJson(report);
        forms.push_back(std::move(f));
    }
    j["forms"] = std::move(forms);
    Json errs = Json::array();
    for (const auto& [name, message] : summary.errors)
        errs.push_back(Json{{"name", name}, {"error", message}});
    j["errors"] = std::move(errs);
    j["allPass"] = summary.allPass;
    return j;
}

}  // namespace zonelab
