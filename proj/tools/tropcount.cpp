#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "trop/count.hpp"
#include "trop/hierarchy.hpp"
#include "trop/io.hpp"
#include "trop/oracle.hpp"
#include "trop/render.hpp"
#include "trop/vertex_mult.hpp"

namespace {

struct CommonFlags {
    std::string problem_path;
    std::optional<unsigned long> seed;
    std::optional<std::string> convention;
    std::optional<int> truncation;
    bool labeled = false;
    bool json = false;
    bool serial = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_problem = true) {
    if (with_problem)
        cmd->add_option("problem", f.problem_path, "problem JSON file")->required();
    cmd->add_option("--seed", f.seed, "override the sampling seed");
    cmd->add_option("--convention", f.convention, "raw | definition | example");
    cmd->add_option("--truncation", f.truncation, "u-series truncation order");
    cmd->add_flag("--labeled-ends", f.labeled, "count end-labeled curves");
    cmd->add_flag("--json", f.json, "machine-readable output");
    cmd->add_flag("--serial", f.serial, "disable the parallel kernels");
}

struct Loaded {
    trop::Degree degree;
    trop::DescendantProfile profile;
    trop::ProblemFile file;
    trop::CountOptions options;
    int truncation;
};

Loaded load(const CommonFlags& f) {
    Loaded l;
    l.file = trop::ProblemFile::load(f.problem_path);
    if (f.seed) l.file.seed = *f.seed;
    if (f.convention) l.file.convention = trop::convention_from_string(*f.convention);
    if (f.truncation) l.file.truncation = *f.truncation;
    if (f.labeled) l.file.labeling = trop::EndLabeling::kLabeled;
    std::tie(l.degree, l.profile) = trop::validate_problem(l.file.delta, l.file.k);
    l.options.convention = l.file.convention;
    l.options.labeling = l.file.labeling;
    l.options.exec = f.serial ? trop::Exec::kSerial : trop::Exec::kParallel;
    int t = l.degree.size() - 2 - static_cast<int>(l.profile.total());
    l.truncation = l.file.truncation.value_or(t + 10);
    return l;
}

trop::CountResult run_count(const Loaded& l) {
    if (l.file.points) {
        trop::PointConfiguration pts;
        pts.points = *l.file.points;
        return trop::count_refined_at(l.degree, l.profile, pts, l.options);
    }
    return trop::count_refined(l.degree, l.profile, l.file.seed, l.options);
}

std::vector<long> parse_int_list(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::vector<trop::Vec2> parse_vec_list(const std::string& s) {
    std::vector<trop::Vec2> out;
    for (const std::string& part : [&] {
             std::vector<std::string> ps;
             std::string cur;
             for (char c : s + ";") {
                 if (c == ';') {
                     ps.push_back(cur);
                     cur.clear();
                 } else
                     cur += c;
             }
             return ps;
         }()) {
        if (part.empty()) continue;
        auto nums = parse_int_list(part);
        if (nums.size() != 2) throw trop::parse_error("vectors are 'x,y' pairs");
        out.push_back({nums[0], nums[1]});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-refined counts of plane tropical curves with descendant conditions"};
    app.require_subcommand(1);

    CommonFlags count_f, enum_f, inv_f, render_f;
    int inv_seeds = 10;
    std::string render_out = "render";

    CLI::App* c_count = app.add_subcommand("count", "refined count for a problem file");
    add_common(c_count, count_f);

    CLI::App* c_enum = app.add_subcommand("enumerate", "list the combinatorial types");
    add_common(c_enum, enum_f);

    CLI::App* c_inv = app.add_subcommand("invariance", "re-count over many seeds and compare");
    add_common(c_inv, inv_f);
    c_inv->add_option("--seeds", inv_seeds, "number of seeds");

    CLI::App* c_render = app.add_subcommand("render", "write one SVG per counted curve");
    add_common(c_render, render_f);
    c_render->add_option("--out", render_out, "output directory");

    CLI::App* c_series = app.add_subcommand("vertex-series", "print f3u / fmp / igd series");
    std::string f3u_arg, fmp_arg, igd_a, igd_b;
    int series_order = 12;
    c_series->add_option("--f3u", f3u_arg, "trivalent vertex: 'x1,y1;x2,y2'");
    c_series->add_option("--fmp", fmp_arg, "pointed vertex: 'x1,y1;x2,y2;...' (balanced)");
    c_series->add_option("--igd-a", igd_a, "first tuple 'a1,a2,...'");
    c_series->add_option("--igd-b", igd_b, "second tuple 'b1,b2,...'");
    c_series->add_option("--order", series_order, "truncation order");

    CLI::App* c_bs = app.add_subcommand("bs-identity", "theta_N vs (N!/6) mu_N random battery");
    int bs_count = 25, bs_bound = 5, bs_nmax = 6;
    unsigned long bs_seed = 1;
    c_bs->add_option("--count", bs_count, "tuples per valency");
    c_bs->add_option("--entry-bound", bs_bound, "entries in [-B, B]");
    c_bs->add_option("--max-valency", bs_nmax, "check N = 3..M");
    c_bs->add_option("--seed", bs_seed, "PRNG seed");

    CLI::App* c_moyal = app.add_subcommand("moyal-verify", "truncated Moyal product claim battery");
    int moyal_d = 3, moyal_count = 20, moyal_order = 8, moyal_bound = 3;
    unsigned long moyal_seed = 1;
    c_moyal->add_option("--max-d", moyal_d, "check d = 1..D");
    c_moyal->add_option("--count", moyal_count, "tuples per d");
    c_moyal->add_option("--order", moyal_order, "epsilon truncation order");
    c_moyal->add_option("--entry-bound", moyal_bound, "entries in [-B, B]");
    c_moyal->add_option("--seed", moyal_seed, "PRNG seed");

    CLI::App* c_oracle = app.add_subcommand("oracle", "Kontsevich count N_d");
    int oracle_d = 3;
    c_oracle->add_option("d", oracle_d, "degree")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_count->parsed()) {
            Loaded l = load(count_f);
            trop::CountResult r = run_count(l);
            if (count_f.json)
                std::cout << trop::report_to_json(r, l.truncation).dump(2) << "\n";
            else
                std::cout << trop::report_to_text(r, l.truncation);
        } else if (c_enum->parsed()) {
            Loaded l = load(enum_f);
            auto types = trop::enumerate_types(l.degree, l.profile, l.file.labeling);
            if (enum_f.json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& t : types) out.push_back(t.to_json());
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << types.size() << " combinatorial types\n";
                for (size_t i = 0; i < types.size(); ++i)
                    std::cout << "type " << i << ": " << types[i].cone_dimension()
                              << " bounded edges, tree decomposition "
                              << (types[i].audit_tree_decomposition() ? "ok" : "violated")
                              << "\n";
            }
        } else if (c_inv->parsed()) {
            Loaded l = load(inv_f);
            std::vector<unsigned long> seeds;
            for (int i = 0; i < inv_seeds; ++i) seeds.push_back(l.file.seed + 1000ul * i);
            auto out = trop::invariance_suite(l.degree, l.profile, seeds, l.options);
            for (size_t i = 0; i < out.results.size(); ++i)
                std::cout << "seed " << seeds[i] << ": " << out.results[i].polynomial.str()
                          << "\n";
            std::cout << (out.pass ? "PASS" : "FAIL") << ": polynomials "
                      << (out.pass ? "agree" : "differ") << " across " << seeds.size()
                      << " seeds\n";
            return out.pass ? trop::kExitOk : trop::kExitFailure;
        } else if (c_render->parsed()) {
            Loaded l = load(render_f);
            trop::CountResult r = run_count(l);
            auto files = trop::render_curves_svg(r, render_out);
            for (const auto& f : files) std::cout << f << "\n";
        } else if (c_series->parsed()) {
            if (!f3u_arg.empty()) {
                auto vs = parse_vec_list(f3u_arg);
                if (vs.size() < 2) throw trop::parse_error("--f3u needs two vectors");
                std::cout << trop::f3u_series(vs[0], vs[1], series_order).str() << "\n";
            }
            if (!fmp_arg.empty()) {
                auto vs = parse_vec_list(fmp_arg);
                std::cout << trop::fmp_series(vs, series_order).str() << "\n";
            }
            if (!igd_a.empty() || !igd_b.empty()) {
                auto a = parse_int_list(igd_a), b = parse_int_list(igd_b);
                std::cout << trop::igd_series(a, b, series_order).str() << "\n";
            }
        } else if (c_bs->parsed()) {
            std::mt19937_64 rng(bs_seed);
            std::uniform_int_distribution<long> dist(-bs_bound, bs_bound);
            bool all = true;
            for (int n = 3; n <= bs_nmax; ++n) {
                for (int trial = 0; trial < bs_count; ++trial) {
                    std::vector<trop::Vec2> vs;
                    long sx = 0, sy = 0;
                    for (int i = 0; i + 1 < n; ++i) {
                        trop::Vec2 v{dist(rng), dist(rng)};
                        sx += v.x;
                        sy += v.y;
                        vs.push_back(v);
                    }
                    vs.push_back({-sx, -sy});
                    mpq_class factor = 1;
                    for (int j = 2; j <= n; ++j) factor *= j;
                    factor /= 6;
                    bool ok = trop::theta_bs(vs) ==
                              trop::mu(vs).scaled(trop::GQ(factor));
                    all = all && ok;
                }
                std::cout << "N=" << n << ": " << bs_count << " tuples checked\n";
            }
            std::cout << (all ? "PASS" : "FAIL") << ": theta_N == (N!/6) mu_N\n";
            return all ? trop::kExitOk : trop::kExitFailure;
        } else if (c_moyal->parsed()) {
            std::mt19937_64 rng(moyal_seed);
            std::uniform_int_distribution<long> dist(-moyal_bound, moyal_bound);
            bool all = true;
            for (int d = 1; d <= moyal_d; ++d) {
                for (int trial = 0; trial < moyal_count; ++trial) {
                    std::vector<long> a, b;
                    for (int i = 0; i <= d; ++i) {
                        a.push_back(dist(rng));
                        b.push_back(dist(rng));
                    }
                    auto rep = trop::verify_moyal_claim(a, b, moyal_order);
                    all = all && rep.pass;
                }
                std::cout << "d=" << d << ": " << moyal_count << " tuples checked\n";
            }
            std::cout << (all ? "PASS" : "FAIL") << ": star product matches the cosine form\n";
            return all ? trop::kExitOk : trop::kExitFailure;
        } else if (c_oracle->parsed()) {
            std::cout << "N_" << oracle_d << " = " << trop::kontsevich(oracle_d).get_str()
                      << "\n";
        }
    } catch (const trop::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return trop::kExitParse;
    } catch (const trop::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return trop::kExitValidation;
    } catch (const trop::genericity_error& e) {
        std::cerr << "genericity error: " << e.what() << "\n";
        return trop::kExitGenericity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return trop::kExitFailure;
    }
    return trop::kExitOk;
}
