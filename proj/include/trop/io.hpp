#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "trop/count.hpp"

namespace trop {

// process exit codes shared by all subcommands
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitGenericity = 4;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemFile {
    std::vector<Vec2> delta;
    std::vector<int> k;
    std::optional<std::vector<QPoint>> points;  // exact rationals, "num/den"
    unsigned long seed = 1;
    Convention convention = Convention::kDefinition;
    std::optional<int> truncation;
    EndLabeling labeling = EndLabeling::kUpToRelabeling;

    static ProblemFile load(const std::string& path);
    static ProblemFile from_json(const nlohmann::json& j);
};

nlohmann::json polynomial_to_json(const RefinedPoly& p);
RefinedPoly polynomial_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const CountedCurve& c);
CountedCurve curve_from_json(const nlohmann::json& j);

// full machine-readable report: problem echo, seed, polynomial, u-expansion,
// per-curve breakdown
nlohmann::json report_to_json(const CountResult& r, int truncation);

struct ParsedReport {
    RefinedPoly polynomial;
    std::vector<CountedCurve> curves;
};
ParsedReport report_from_json(const nlohmann::json& j);

// human-readable report
std::string report_to_text(const CountResult& r, int truncation);

}  // namespace trop
