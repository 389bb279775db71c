#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polyvar/combination.hpp"
#include "polyvar/fixtures.hpp"
#include "polyvar/report.hpp"
#include "polyvar/saturation.hpp"

namespace pv = polyvar;
using pv::Json;

namespace {

struct CliConfig {
    uint64_t seed = 0;
    bool seed_set = false;
    int budget_degree = 0;
    double budget_time = 0.0;
    std::string constants_file;
    std::string out_path;
    bool timing = false;
};

struct Constants {
    pv::Rational c0 = pv::Rational(1);
    pv::Rational c1 = pv::rational_of(1, 4);
    pv::Rational theorem6_c1 = pv::Rational(1);
    pv::Rational rich_c2 = pv::Rational(1);
};

const std::map<std::string, std::vector<std::string>> kScenarioFields = {
    {"hilbert", {"kind", "seed", "budgets", "vars", "generators", "m_min", "m_max"}},
    {"groebner", {"kind", "seed", "budgets", "vars", "generators", "order"}},
    {"profile",
     {"kind", "seed", "budgets", "vars", "generators", "parameterization", "param_vars",
      "degree_cap"}},
    {"siegel", {"kind", "seed", "budgets", "vars", "generators", "points", "targets"}},
    {"partition", {"kind", "seed", "budgets", "vars", "generators", "points", "M", "param_vars",
                   "parameterization"}},
    {"envelope", {"kind", "seed", "budgets", "vars", "generators", "tuple"}},
    {"fullcover", {"kind", "seed", "budgets", "vars", "generators"}},
    {"incidence",
     {"kind", "seed", "budgets", "vars", "points", "hypersurfaces", "k", "b", "d", "deg_v"}},
    {"construct-sharp",
     {"kind", "seed", "budgets", "vars", "generators", "parameterization", "param_vars",
      "abstract", "k", "b", "delta"}},
    {"components-grid",
     {"kind", "seed", "budgets", "vars", "polynomial", "box_lo", "box_hi", "resolution"}},
    {"calibrate", {"kind", "seed", "budgets"}},
};

void validate_fields(const Json& scenario, const std::string& kind) {
    auto it = kScenarioFields.find(kind);
    if (it == kScenarioFields.end()) throw pv::ParseError("unknown scenario kind: " + kind);
    for (const auto& [key, value] : scenario.items()) {
        if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
            throw pv::ParseError("unknown field '" + key + "' for scenario kind " + kind);
    }
}

std::vector<pv::Polynomial> parse_polys(const Json& arr, int nvars) {
    std::vector<pv::Polynomial> out;
    for (const auto& s : arr) out.push_back(pv::Polynomial::parse(s.get<std::string>(), nvars));
    return out;
}

std::vector<pv::RationalPoint> parse_points(const Json& arr) {
    std::vector<pv::RationalPoint> out;
    for (const auto& pt : arr) {
        pv::RationalPoint p;
        for (const auto& c : pt) p.coords.push_back(pv::Rational::from_string(c.get<std::string>()));
        out.push_back(std::move(p));
    }
    return out;
}

pv::Variety variety_from_scenario(const Json& scenario, int vars, const pv::Budget& budget) {
    std::vector<pv::Polynomial> gens = parse_polys(scenario.at("generators"), vars);
    pv::Variety v = gens.empty()
                        ? [&] {
                              pv::Variety w;
                              w.ideal = pv::Ideal(vars);
                              w.dim = vars;
                              w.degree = 1;
                              return w;
                          }()
                        : pv::Variety::from_ideal(pv::Ideal(gens, vars), budget);
    if (scenario.contains("parameterization")) {
        int pvars = scenario.value("param_vars", 1);
        v.attach_parameterization(parse_polys(scenario.at("parameterization"), pvars));
    }
    return v;
}

Constants load_constants(const std::string& path) {
    Constants c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw pv::ParseError("cannot open constants file " + path);
    Json j = Json::parse(in);
    if (j.contains("c0")) c.c0 = pv::Rational::from_string(j["c0"].get<std::string>());
    if (j.contains("c1")) c.c1 = pv::Rational::from_string(j["c1"].get<std::string>());
    if (j.contains("theorem6_c1"))
        c.theorem6_c1 = pv::Rational::from_string(j["theorem6_c1"].get<std::string>());
    if (j.contains("rich_c2")) c.rich_c2 = pv::Rational::from_string(j["rich_c2"].get<std::string>());
    return c;
}

Json run_calibrate(uint64_t seed, const pv::Budget& budget);

Json dispatch(const Json& scenario, const std::string& kind, const CliConfig& cfg,
              const Constants& constants) {
    pv::Budget budget;
    if (scenario.contains("budgets")) {
        const Json& b = scenario["budgets"];
        budget.max_degree = b.value("degree", budget.max_degree);
        budget.max_basis = b.value("basis", budget.max_basis);
    }
    if (cfg.budget_degree > 0) budget.max_degree = cfg.budget_degree;
    uint64_t seed = cfg.seed_set ? cfg.seed : scenario.value("seed", 0ULL);

    if (kind == "hilbert") {
        int vars = scenario.at("vars");
        pv::Ideal ideal(parse_polys(scenario.at("generators"), vars), vars);
        int m_min = scenario.value("m_min", 0);
        int m_max = scenario.at("m_max");
        Json values = Json::array();
        for (int m = m_min; m <= m_max; ++m) values.push_back(pv::affine_hilbert(ideal, m, budget));
        Json res{{"values", values}};
        if (!ideal.is_unit(budget)) res["dimension_degree"] = to_json(pv::dimension_and_degree(ideal, budget));
        return res;
    }
    if (kind == "groebner") {
        int vars = scenario.at("vars");
        std::string order_name = scenario.value("order", "grevlex");
        pv::MonomialOrder ord =
            order_name == "lex" ? pv::MonomialOrder::lex() : pv::MonomialOrder::grevlex();
        pv::GroebnerBasis gb = pv::buchberger(parse_polys(scenario.at("generators"), vars), ord, budget);
        return Json{{"groebner", to_json(gb)}};
    }
    if (kind == "profile") {
        int vars = scenario.at("vars");
        pv::Variety v = variety_from_scenario(scenario, vars, budget);
        pv::ProfileOptions opts;
        opts.budget = budget;
        opts.split.budget = budget;
        opts.degree_cap = scenario.value("degree_cap", opts.degree_cap);
        opts.seed = seed;
        pv::DeltaProfile profile = pv::delta_profile(v, opts);
        Json res{{"profile", to_json(profile)}};
        res["converse_bezout"] = to_json(pv::converse_bezout_report(v, profile));
        std::vector<pv::Rational> kb(profile.tuple.size(), pv::Rational(1));
        res["tuple_certificate"] = to_json(pv::verify_admissible_tuple(v, profile, profile.tuple, kb, opts));
        return res;
    }
    if (kind == "siegel") {
        int vars = scenario.at("vars");
        pv::Variety v = variety_from_scenario(scenario, vars, budget);
        pv::SiegelOptions opts;
        opts.budget = budget;
        if (scenario.contains("targets")) {
            std::vector<pv::Variety> targets;
            for (const auto& t : scenario["targets"]) {
                pv::Variety tv = pv::Variety::from_ideal(
                    pv::Ideal(parse_polys(t.at("generators"), vars), vars), budget);
                if (t.contains("parameterization"))
                    tv.attach_parameterization(parse_polys(t.at("parameterization"),
                                                           t.value("param_vars", 1)));
                targets.push_back(std::move(tv));
            }
            return Json{{"siegel", to_json(pv::vanish_on_varieties(v, targets, opts))}};
        }
        return Json{{"siegel",
                     to_json(pv::vanish_on_points(v, parse_points(scenario.at("points")), opts))}};
    }
    if (kind == "partition") {
        int vars = scenario.at("vars");
        pv::Variety v = variety_from_scenario(scenario, vars, budget);
        pv::ProfileOptions popts;
        popts.budget = budget;
        popts.seed = seed;
        pv::DeltaProfile profile = pv::delta_profile(v, popts);
        pv::PartitionOptions opts;
        opts.budget = budget;
        opts.hs.seed = seed;
        opts.constants.c0 = constants.c0;
        opts.constants.c1 = constants.c1;
        auto [chain, report] = pv::partition(v, profile, parse_points(scenario.at("points")),
                                             scenario.at("M").get<long>(), opts);
        Json bisectors = Json::array();
        for (const auto& h : chain.rounds) bisectors.push_back(h.to_string());
        return Json{{"partition", to_json(report)}, {"bisectors", bisectors}};
    }
    if (kind == "envelope") {
        int vars = scenario.at("vars");
        pv::Variety v = variety_from_scenario(scenario, vars, budget);
        pv::ProfileOptions opts;
        opts.budget = budget;
        opts.seed = seed;
        std::vector<pv::Polynomial> tuple = parse_polys(scenario.at("tuple"), vars);
        pv::EnvelopeReport rep = pv::envelope(v, tuple, opts);
        Json res{{"envelope", to_json(rep)}};
        pv::DeltaProfile profile = pv::delta_profile(v, opts);
        res["killers"] = Json::array();
        for (const auto& kr : pv::envelope_killers(v, profile, rep, opts))
            res["killers"].push_back(Json{{"k", kr.k},
                                          {"polynomial", kr.f.to_string()},
                                          {"degree_below_delta_k", kr.degree_below_delta_k}});
        return res;
    }
    if (kind == "fullcover") {
        int vars = scenario.at("vars");
        pv::Variety v = variety_from_scenario(scenario, vars, budget);
        pv::CoverOptions opts;
        opts.profile.budget = budget;
        opts.profile.seed = seed;
        return Json{{"fullcover", to_json(pv::full_cover(v, opts))}};
    }
    if (kind == "incidence") {
        int vars = scenario.at("vars");
        auto points = parse_points(scenario.at("points"));
        auto surfaces = parse_polys(scenario.at("hypersurfaces"), vars);
        pv::IncidenceStructure st = pv::IncidenceStructure::build(points, surfaces);
        pv::FreenessParams params{scenario.value("k", 1), scenario.value("b", 1)};
        long inc = pv::count_incidences(st);
        pv::FreenessWitness fw = pv::check_kb_free(st, params);
        Json res{{"incidences", inc},
                 {"kb_free", fw.free},
                 {"kst_bound", pv::kst_bound(st.points.size(), st.hypersurfaces.size(), params)
                                   .to_string()}};
        int d = scenario.value("d", vars);
        long deg_v = scenario.value("deg_v", 1L);
        res["theorem6"] =
            to_json(pv::theorem6_bound(st.points.size(), std::max<long>(st.deg_t_sum, 1), deg_v, d,
                                       params, constants.theorem6_c1));
        if (!fw.free) {
            res["witness_points"] = fw.points;
            res["witness_hypersurfaces"] = fw.hypersurfaces;
        }
        return res;
    }
    if (kind == "construct-sharp") {
        int vars = scenario.at("vars");
        pv::Variety v = variety_from_scenario(scenario, vars, budget);
        std::string joined;
        for (const auto& line : scenario.at("abstract"))
            joined += line.get<std::string>() + "\n";
        std::istringstream in(joined);
        pv::AbstractBipartite bip = pv::parse_abstract_bipartite(in);
        pv::SharpOptions opts;
        opts.seed = seed;
        opts.budget = budget;
        return Json{{"sharp",
                     to_json(pv::sharp_construction(bip, v, scenario.at("k"), scenario.at("b"),
                                                    scenario.value("delta", 1), opts))}};
    }
    if (kind == "components-grid") {
        int vars = scenario.at("vars");
        pv::Polynomial p = pv::Polynomial::parse(scenario.at("polynomial").get<std::string>(), vars);
        pv::Box box;
        for (const auto& c : scenario.at("box_lo"))
            box.lo.push_back(pv::Rational::from_string(c.get<std::string>()));
        for (const auto& c : scenario.at("box_hi"))
            box.hi.push_back(pv::Rational::from_string(c.get<std::string>()));
        return Json{{"components",
                     to_json(pv::stable_components_grid(p, box, scenario.at("resolution")))}};
    }
    if (kind == "calibrate") return run_calibrate(seed, budget);
    throw pv::ParseError("unknown scenario kind: " + kind);
}

Json run_calibrate(uint64_t seed, const pv::Budget& budget) {
    namespace fx = pv::fixtures;
    Json per_fixture = Json::object();
    pv::Rational min_c0(0);
    bool have_c0 = false;

    struct Entry {
        std::string name;
        pv::Variety v;
    };
    std::vector<Entry> entries;
    entries.push_back({"twisted_cubic", fx::twisted_cubic()});
    entries.push_back({"circle", fx::circle()});
    entries.push_back({"parabola", fx::parabola()});
    entries.push_back({"line_in_3", fx::line_in_3()});
    entries.push_back({"plane_curve_3", fx::plane_curve(3)});
    entries.push_back({"plane_curve_4", fx::plane_curve(4)});
    if (entries.empty()) throw pv::FixtureFailure("empty fixture suite");

    std::vector<std::pair<std::string, pv::DeltaProfile>> profiles;
    for (const auto& e : entries) {
        pv::HilbertData hd = pv::dimension_and_degree(e.v.ideal, budget);
        if (!hd.c0_sampled || !(hd.c0_observed > pv::Rational(0)))
            throw pv::FixtureFailure("fixture " + e.name + " produced no positive c0");
        if (!have_c0 || hd.c0_observed < min_c0) min_c0 = hd.c0_observed;
        have_c0 = true;
        pv::ProfileOptions popts;
        popts.budget = budget;
        popts.seed = seed;
        pv::DeltaProfile profile = pv::delta_profile(e.v, popts);
        per_fixture[e.name] = Json{{"c0_observed", hd.c0_observed.to_string()},
                                   {"deltas", profile.deltas},
                                   {"certified", profile.certified}};
        profiles.emplace_back(e.name, std::move(profile));
    }

    // Largest c1 from a fixed grid under which interval coverage never falls
    // back, across fixtures and M in 1..16 (with c0 = 1).
    pv::Rational best_c1(0);
    for (int shift = 0; shift <= 6; ++shift) {
        pv::Rational c1 = pv::Rational(1) / pv::Rational(1L << shift);
        bool ok = true;
        for (const auto& [name, profile] : profiles)
            for (long m = 1; m <= 16 && ok; ++m)
                if (pv::i_v_of_m(profile, m, pv::Rational(1), c1).fallback) ok = false;
        if (ok) {
            best_c1 = c1;
            break;
        }
    }
    if (best_c1 == pv::Rational(0)) best_c1 = pv::rational_of(1, 64);

    return Json{{"fixtures", per_fixture},
                {"constants",
                 Json{{"c0", min_c0.to_string()},
                      {"c1", best_c1.to_string()},
                      {"theorem6_c1", "1"},
                      {"rich_c2", "1"}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyvar: exact polynomial-method toolkit over varieties"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string scenario_path;

    std::vector<std::string> kinds = {"run",       "hilbert",        "groebner",  "profile",
                                      "siegel",    "partition",      "envelope",  "fullcover",
                                      "incidence", "construct-sharp", "components-grid",
                                      "calibrate"};
    std::map<std::string, CLI::App*> subs;
    for (const auto& k : kinds) {
        CLI::App* sub = app.add_subcommand(k, k == "run" ? "run a scenario file"
                                                         : "run a scenario as kind '" + k + "'");
        if (k != "calibrate")
            sub->add_option("scenario", scenario_path, "scenario JSON file")->required();
        else
            sub->add_option("scenario", scenario_path, "optional scenario JSON file");
        sub->add_option("--seed", cfg.seed, "override the scenario seed")
            ->each([&](const std::string&) { cfg.seed_set = true; });
        sub->add_option("--budget-degree", cfg.budget_degree, "Groebner degree ceiling");
        sub->add_option("--budget-time", cfg.budget_time, "advisory time budget (seconds)");
        sub->add_option("--constants-file", cfg.constants_file, "measured constants JSON");
        sub->add_option("--out", cfg.out_path, "report output path (default stdout)");
        sub->add_flag("--timing", cfg.timing, "include wall-clock timing (breaks byte determinism)");
        subs[k] = sub;
    }

    CLI11_PARSE(app, argc, argv);

    std::string invoked;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) invoked = name;

    Json report = Json::object();
    int exit_code = 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Json scenario = Json::object();
        if (!scenario_path.empty()) {
            std::ifstream in(scenario_path);
            if (!in) throw pv::ParseError("cannot open scenario file " + scenario_path);
            try {
                scenario = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw pv::ParseError(std::string("scenario JSON: ") + e.what());
            }
        } else if (invoked == "calibrate") {
            scenario = Json{{"kind", "calibrate"}};
        }
        std::string kind = invoked == "run" ? scenario.value("kind", "") : invoked;
        if (invoked != "run" && scenario.contains("kind") &&
            scenario["kind"].get<std::string>() != kind)
            scenario["kind"] = kind;  // subcommand overrides the scenario kind
        if (!scenario.contains("kind")) scenario["kind"] = kind;
        validate_fields(scenario, kind);

        Constants constants = load_constants(cfg.constants_file);
        Json results = dispatch(scenario, kind, cfg, constants);
        report["scenario"] = scenario;
        report["status"] = "ok";
        report["results"] = results;
    } catch (const pv::ParseError& e) {
        report["status"] = "input-error";
        report["error"] = {{"code", e.code()}, {"message", e.what()}};
        exit_code = 1;
    } catch (const pv::PreconditionViolated& e) {
        report["status"] = "input-error";
        report["error"] = {{"code", e.code()}, {"message", e.what()}};
        exit_code = 1;
    } catch (const pv::Error& e) {
        report["status"] = "budget-or-incomplete";
        report["error"] = {{"code", e.code()}, {"message", e.what()}};
        exit_code = 2;
    } catch (const nlohmann::json::exception& e) {
        report["status"] = "input-error";
        report["error"] = {{"code", "scenario-schema"}, {"message", e.what()}};
        exit_code = 1;
    }
    if (cfg.timing) {
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report["timing_seconds"] = dt;
    }

    std::string text = report.dump(2) + "\n";
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        out << text;
    }
    return exit_code;
}
