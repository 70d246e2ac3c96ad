// zonelab: exact lattice-geometry toolkit.
//
// Subcommands: star | voronoi | zones | laminae | cone | extend | audit.
// Input forms are JSON files {"dim": n, "gram": [["p/q", ...], ...]};
// all output is exact-rational JSON.

#include "CLI11.hpp"

#include "zonelab/audit.hpp"
#include "zonelab/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace zonelab;

constexpr int kExitOk = 0;
constexpr int kExitAuditFail = 1;
constexpr int kExitInputError = 2;

IntVector parseK(const std::string& csv, std::size_t dim)
{
    IntVector k;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        k.push_back(std::stol(tok));
    if (k.size() != dim)
        throw std::invalid_argument("--k has wrong dimension");
    return k;
}

std::vector<Rat> parseLambdas(const std::string& csv)
{
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(ratFromString(tok));
    if (out.empty())
        throw std::invalid_argument("--lambda-samples is empty");
    return out;
}

void emit(const Json& j, const std::string& outPath)
{
    std::string text = j.dump(2) + "\n";
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + outPath);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Voronoi/Delaunay toolkit for rational quadratic forms"};
    app.require_subcommand(1);

    std::string formPath, outPath, corpusDir, kCsv, lambdaStr;
    std::string lambdaSamplesCsv = "1/4,1,4";
    int dimLimit = 5;

    auto addCommon = [&](CLI::App* cmd, bool needsFile) {
        if (needsFile)
            cmd->add_option("form", formPath, "form JSON file")->required();
        cmd->add_option("--out", outPath, "output path (default stdout)");
        cmd->add_option("--dim-limit", dimLimit, "maximum allowed dimension");
    };

    auto* cmdStar = app.add_subcommand("star", "Delaunay star at the origin");
    addCommon(cmdStar, true);
    auto* cmdVoronoi = app.add_subcommand("voronoi", "Voronoi polytope face poset");
    addCommon(cmdVoronoi, true);
    auto* cmdZones = app.add_subcommand("zones", "edge zones, closed/open");
    addCommon(cmdZones, true);
    auto* cmdLaminae = app.add_subcommand("laminae", "lamina directions");
    addCommon(cmdLaminae, true);
    cmdLaminae->add_option("--k", kCsv, "single direction (csv ints)");
    auto* cmdCone = app.add_subcommand("cone", "L-type cone and extreme rays");
    addCommon(cmdCone, true);
    auto* cmdExtend = app.add_subcommand("extend", "extend the form along k");
    addCommon(cmdExtend, true);
    cmdExtend->add_option("--k", kCsv, "direction (csv ints)")->required();
    cmdExtend->add_option("--lambda", lambdaStr, "extension parameter p/q")
        ->required();
    auto* cmdAudit = app.add_subcommand("audit", "four-way equivalence audit");
    addCommon(cmdAudit, false);
    cmdAudit->add_option("form", formPath, "form JSON file");
    cmdAudit->add_option("--corpus", corpusDir, "directory of form files");
    cmdAudit->add_option("--lambda-samples", lambdaSamplesCsv,
                         "extension samples (csv of p/q)");

    CLI11_PARSE(app, argc, argv);

    try {
        auto loadForm = [&](const std::string& path) {
            FormFile f = parseFormFile(path);
            if (f.dim > std::size_t(dimLimit))
                throw std::invalid_argument("form dimension " +
                                            std::to_string(f.dim) +
                                            " exceeds --dim-limit");
            return f;
        };

        if (cmdStar->parsed()) {
            FormFile f = loadForm(formPath);
            emit(starToJson(delaunayStar(f.form)), outPath);
        } else if (cmdVoronoi->parsed()) {
            FormFile f = loadForm(formPath);
            HPolytope p = voronoiPolytope(f.form);
            FacePoset poset = buildFacePoset(p);
            Json j = posetToJson(poset, zones(poset));
            j["zones"] = zonesToJson(f.form, zones(poset));
            emit(j, outPath);
        } else if (cmdZones->parsed()) {
            FormFile f = loadForm(formPath);
            FacePoset poset = buildFacePoset(voronoiPolytope(f.form));
            emit(zonesToJson(f.form, zones(poset)), outPath);
        } else if (cmdLaminae->parsed()) {
            FormFile f = loadForm(formPath);
            DelaunayStar star = delaunayStar(f.form);
            if (!kCsv.empty()) {
                emit(laminaReportToJson(f.form, star, parseK(kCsv, f.dim)),
                     outPath);
            } else {
                Json arr = Json::array();
                for (const IntVector& k : laminaCandidates(star))
                    arr.push_back(laminaReportToJson(f.form, star, k));
                emit(arr, outPath);
            }
        } else if (cmdCone->parsed()) {
            FormFile f = loadForm(formPath);
            SecondaryCone cone = coneOfLType(f.form, delaunayStar(f.form));
            emit(coneToJson(cone, extremeRays(cone)), outPath);
        } else if (cmdExtend->parsed()) {
            FormFile f = loadForm(formPath);
            GramForm extended =
                extendForm(f.form, parseK(kCsv, f.dim), ratFromString(lambdaStr));
            FormFile out;
            out.dim = f.dim;
            out.form = std::move(extended);
            out.name = f.name;
            emit(formToJson(out), outPath);
        } else if (cmdAudit->parsed()) {
            std::vector<Rat> samples = parseLambdas(lambdaSamplesCsv);
            if (!corpusDir.empty()) {
                std::vector<CorpusEntry> entries;
                std::vector<std::filesystem::path> files;
                for (const auto& e :
                     std::filesystem::directory_iterator(corpusDir))
                    if (e.path().extension() == ".json")
                        files.push_back(e.path());
                std::sort(files.begin(), files.end());
                for (const auto& p : files) {
                    FormFile f = loadForm(p.string());
                    entries.push_back(CorpusEntry{
                        f.name.empty() ? p.filename().string() : f.name,
                        std::move(f.form)});
                }
                CorpusSummary summary = auditCorpus(entries, samples);
                emit(corpusSummaryToJson(summary), outPath);
                return summary.allPass ? kExitOk : kExitAuditFail;
            }
            if (formPath.empty())
                throw std::invalid_argument("audit needs a form file or --corpus");
            FormFile f = loadForm(formPath);
            AuditReport report = auditTheorem1(f.form, samples);
            emit(auditReportToJson(report), outPath);
            return report.pass ? kExitOk : kExitAuditFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
