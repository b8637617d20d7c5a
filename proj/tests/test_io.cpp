#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "trop/hierarchy.hpp"
#include "trop/io.hpp"
#include "trop/render.hpp"

using namespace trop;

namespace {

nlohmann::json example_problem() {
    return nlohmann::json{
        {"delta", {{-1, 0}, {-1, 0}, {0, -1}, {1, 0}, {1, 0}, {0, 1}}},
        {"k", {0, 1, 0, 0}},
        {"seed", 1},
        {"convention", "example"},
    };
}

CountResult run(const nlohmann::json& j) {
    ProblemFile p = ProblemFile::from_json(j);
    auto [deg, prof] = validate_problem(p.delta, p.k);
    CountOptions opt;
    opt.convention = p.convention;
    opt.labeling = p.labeling;
    opt.exec = Exec::kSerial;
    return count_refined(deg, prof, p.seed, opt);
}

}  // namespace

TEST_CASE("problem files parse with rationals and defaults") {
    nlohmann::json j = example_problem();
    j["points"] = nlohmann::json::array(
        {{"1/2", "-3/5"}, {"0", "1"}, {"2", "7/3"}, {"-1/7", "4"}});
    ProblemFile p = ProblemFile::from_json(j);
    CHECK(p.delta.size() == 6);
    CHECK(p.k == std::vector<int>{0, 1, 0, 0});
    REQUIRE(p.points.has_value());
    CHECK((*p.points)[0][0] == mpq_class(1, 2));
    CHECK((*p.points)[3][0] == mpq_class(-1, 7));
    CHECK(p.convention == Convention::kExample);
    CHECK(p.labeling == EndLabeling::kUpToRelabeling);
}

TEST_CASE("malformed problems raise parse errors") {
    CHECK_THROWS_AS(ProblemFile::from_json({{"delta", {{1}, {2, 3}}}}), parse_error);
    CHECK_THROWS_AS(ProblemFile::from_json({{"k", {0}}}), parse_error);
    nlohmann::json j = example_problem();
    j["points"] = nlohmann::json::array({{"1/0", "2"}});
    CHECK_THROWS_AS(ProblemFile::from_json(j), parse_error);
}

TEST_CASE("report JSON round-trips polynomial and curves bit-exactly") {
    CountResult r = run(example_problem());
    nlohmann::json rep = report_to_json(r, 9);
    ParsedReport back = report_from_json(rep);
    CHECK(back.polynomial == r.polynomial);
    REQUIRE(back.curves.size() == r.curves.size());
    for (size_t i = 0; i < r.curves.size(); ++i) {
        CHECK(back.curves[i].multiplicity == r.curves[i].multiplicity);
        CHECK(back.curves[i].curve.positions == r.curves[i].curve.positions);
        CHECK(back.curves[i].curve.lengths == r.curves[i].curve.lengths);
        CHECK(back.curves[i].type.canonical_key(true) == r.curves[i].type.canonical_key(true));
    }
}

TEST_CASE("same seed produces byte-identical reports") {
    CountResult a = run(example_problem());
    CountResult b = run(example_problem());
    CHECK(report_to_json(a, 9).dump() == report_to_json(b, 9).dump());
    CHECK(report_to_text(a, 9) == report_to_text(b, 9));
}

TEST_CASE("line report text shows half-integer powers") {
    nlohmann::json j{{"delta", {{1, 0}, {0, 1}, {-1, -1}}}, {"k", {0, 0}}, {"seed", 2}};
    CountResult r = run(j);
    CHECK(r.polynomial.str() == "-q^(-1/2) + q^(1/2)");
}

TEST_CASE("curve series consistency holds for counted curves") {
    CountResult r = run(example_problem());
    REQUIRE(!r.curves.empty());
    for (const auto& cc : r.curves) CHECK(curve_series_consistency(cc.type, 12));

    nlohmann::json j{{"delta", {{1, 0}, {0, 1}, {-1, -1}}}, {"k", {0, 0}}, {"seed", 2}};
    CountResult line = run(j);
    for (const auto& cc : line.curves) CHECK(curve_series_consistency(cc.type, 12));
}

TEST_CASE("svg rendering writes one deterministic file per curve") {
    CountResult r = run(example_problem());
    auto dir = std::filesystem::temp_directory_path() / "tropcount_svg_test";
    std::filesystem::remove_all(dir);
    auto files = render_curves_svg(r, dir.string(), "example");
    CHECK(files.size() == r.curves.size());
    for (const auto& f : files) {
        std::ifstream in(f);
        std::string body((std::istreambuf_iterator<char>(in)), {});
        CHECK(body.find("<svg") != std::string::npos);
        CHECK(body.find("crimson") != std::string::npos);  // the marked-point crosses
    }
    std::string doc1 = curve_svg_document(r.curves[0], r.points);
    std::string doc2 = curve_svg_document(r.curves[0], r.points);
    CHECK(doc1 == doc2);

    // empty counts render nothing and succeed
    nlohmann::json j{{"delta", {{1, 0}, {1, 0}, {-1, 0}, {-1, 0}}}, {"k", {0, 0, 0}}, {"seed", 1}};
    CountResult empty = run(j);
    CHECK(empty.curves.empty());
    CHECK(render_curves_svg(empty, dir.string(), "none").empty());
    std::filesystem::remove_all(dir);
}
