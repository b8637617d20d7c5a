#include "trop/io.hpp"

#include <fstream>
#include <sstream>

namespace trop {

ProblemFile ProblemFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    return from_json(j);
}

ProblemFile ProblemFile::from_json(const nlohmann::json& j) {
    ProblemFile p;
    try {
        for (const auto& d : j.at("delta")) {
            if (!d.is_array() || d.size() != 2) throw parse_error("delta entries are [x, y]");
            p.delta.push_back({d[0].get<long>(), d[1].get<long>()});
        }
        if (j.contains("k"))
            for (const auto& v : j.at("k")) p.k.push_back(v.get<int>());
        if (j.contains("points")) {
            std::vector<QPoint> pts;
            for (const auto& q : j.at("points")) {
                if (!q.is_array() || q.size() != 2) throw parse_error("points are [x, y]");
                pts.push_back({parse_rational(q[0].get<std::string>()),
                               parse_rational(q[1].get<std::string>())});
            }
            p.points = std::move(pts);
        }
        if (j.contains("seed")) p.seed = j.at("seed").get<unsigned long>();
        if (j.contains("convention"))
            p.convention = convention_from_string(j.at("convention").get<std::string>());
        if (j.contains("truncation")) p.truncation = j.at("truncation").get<int>();
        if (j.contains("labeled_ends") && j.at("labeled_ends").get<bool>())
            p.labeling = EndLabeling::kLabeled;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad problem file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad problem file: ") + e.what());
    }
    return p;
}

nlohmann::json polynomial_to_json(const RefinedPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.coefficients())
        terms.push_back({e, rational_string(c.re), rational_string(c.im)});
    return {{"text", p.str()}, {"terms", terms}};
}

RefinedPoly polynomial_from_json(const nlohmann::json& j) {
    RefinedPoly p;
    for (const auto& t : j.at("terms"))
        p.set(t[0].get<long>(), GQ(parse_rational(t[1].get<std::string>()),
                                        parse_rational(t[2].get<std::string>())));
    return p;
}

nlohmann::json curve_to_json(const CountedCurve& c) {
    nlohmann::json j;
    j["type"] = c.type.to_json();
    j["multiplicity"] = polynomial_to_json(c.multiplicity);
    nlohmann::json pos = nlohmann::json::array();
    for (const auto& q : c.curve.positions)
        pos.push_back({rational_string(q[0]), rational_string(q[1])});
    j["positions"] = pos;
    nlohmann::json len = nlohmann::json::array();
    for (const auto& l : c.curve.lengths) len.push_back(rational_string(l));
    j["lengths"] = len;
    j["end_symmetry"] = c.end_symmetry;
    return j;
}

CountedCurve curve_from_json(const nlohmann::json& j) {
    CountedCurve c;
    c.type = CombinatorialType::from_json(j.at("type"));
    c.multiplicity = polynomial_from_json(j.at("multiplicity"));
    c.curve.type = c.type;
    for (const auto& q : j.at("positions"))
        c.curve.positions.push_back({parse_rational(q[0].get<std::string>()),
                                     parse_rational(q[1].get<std::string>())});
    for (const auto& l : j.at("lengths"))
        c.curve.lengths.push_back(parse_rational(l.get<std::string>()));
    c.end_symmetry = j.value("end_symmetry", 1l);
    return c;
}

nlohmann::json report_to_json(const CountResult& r, int truncation) {
    nlohmann::json j;
    nlohmann::json delta = nlohmann::json::array();
    for (const Vec2& d : r.degree.entries) delta.push_back({d.x, d.y});
    j["problem"] = {{"delta", delta}, {"k", r.profile.k}};
    j["convention"] = to_string(r.convention);
    j["labeled_ends"] = r.labeling == EndLabeling::kLabeled;
    j["seed"] = r.seed;
    j["resamples"] = r.resamples;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& q : r.points.points)
        pts.push_back({rational_string(q[0]), rational_string(q[1])});
    j["points"] = pts;
    j["polynomial"] = polynomial_to_json(r.polynomial);
    UExpansion ux = u_expansion(r, truncation);
    nlohmann::json ng = nlohmann::json::array();
    for (const auto& c : ux.genus_coeff) ng.push_back(rational_string(c));
    j["u_expansion"] = {{"leading_power", ux.leading_power},
                        {"truncation", truncation},
                        {"genus_coefficients", ng}};
    nlohmann::json curves = nlohmann::json::array();
    for (const auto& c : r.curves) curves.push_back(curve_to_json(c));
    j["curves"] = curves;
    return j;
}

ParsedReport report_from_json(const nlohmann::json& j) {
    ParsedReport rep;
    rep.polynomial = polynomial_from_json(j.at("polynomial"));
    for (const auto& c : j.at("curves")) rep.curves.push_back(curve_from_json(c));
    return rep;
}

std::string report_to_text(const CountResult& r, int truncation) {
    std::ostringstream os;
    os << "N_trop(q) = " << r.polynomial.str() << "\n";
    os << "convention: " << to_string(r.convention) << ", seed: " << r.seed
       << " (resamples: " << r.resamples << ")\n";
    os << "curves: " << r.curves.size() << "\n";
    for (size_t i = 0; i < r.curves.size(); ++i) {
        os << "  curve " << i << ": multiplicity " << r.curves[i].multiplicity.str();
        if (r.curves[i].end_symmetry != 1)
            os << " (end symmetry " << r.curves[i].end_symmetry << ")";
        os << "\n";
    }
    UExpansion ux = u_expansion(r, truncation);
    os << "u-expansion: leading power u^" << ux.leading_power << ", N_g =";
    for (const auto& c : ux.genus_coeff) os << " " << rational_string(c);
    os << "\n";
    return os.str();
}

}  // namespace trop
