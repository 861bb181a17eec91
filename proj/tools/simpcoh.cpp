// Command-line front end: build objects, run checks and verification suites.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 for
// malformed command lines or input files.

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "simpcoh/io.hpp"
#include "simpcoh/suites.hpp"

using namespace simpcoh;

namespace {

struct Globals {
    int cap = 3;
    int M = 4;
    std::uint64_t budget = default_budget;
    std::uint64_t seed = 1;
    std::string out;
};

int emit(const Globals& g, const Json& j, bool pass = true) {
    auto text = dump(j);
    if (g.out.empty()) std::cout << text;
    else write_file(g.out, text);
    return pass ? 0 : 1;
}

Json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
    Json out = Json::array();
    for (const auto& [name, pass] : checks) out.push_back({{"check", name}, {"pass", pass}});
    return out;
}

bool all_pass(const std::vector<std::pair<std::string, bool>>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

Json simplex_ref(const Simplex& s) { return Json::array({s.dim, s.index}); }

SuiteOptions suite_options(const Globals& g, int max_n) {
    SuiteOptions o;
    o.cap = g.cap;
    o.M = g.M;
    o.budget = g.budget;
    o.seed = g.seed;
    o.max_n = max_n;
    return o;
}

/// Runs suites concurrently when jobs > 1; reports keep the order of ids.
int run_suites(const Globals& g, const std::vector<std::string>& ids, const SuiteOptions& o, unsigned jobs) {
    std::vector<VerificationReport> reports(ids.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) reports[i] = run_suite(ids[i], o);
    } else {
        for (std::size_t start = 0; start < ids.size(); start += jobs) {
            std::vector<std::future<VerificationReport>> batch;
            for (std::size_t i = start; i < std::min(ids.size(), start + jobs); ++i)
                batch.push_back(std::async(std::launch::async, [&, i] { return run_suite(ids[i], o); }));
            for (std::size_t i = 0; i < batch.size(); ++i) reports[start + i] = batch[i].get();
        }
    }
    bool pass = true;
    for (const auto& r : reports) {
        pass &= r.passed();
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.checks.size() << " checks)\n";
    }
    if (reports.size() == 1) return emit(g, reports[0].to_json(), pass);
    Json all;
    all["passed"] = pass;
    all["reports"] = Json::array();
    for (const auto& r : reports) all["reports"].push_back(r.to_json());
    return emit(g, all, pass);
}

FiniteCategory category_arg(const std::string& group, const std::string& file) {
    if (!file.empty()) return category_from_json(parse_json(read_file(file)));
    return FiniteCategory::from_group(parse_group(group));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite simplicial sets, cochains, Eilenberg-MacLane models and bounded-cohomology checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Globals g;
    app.add_option("--cap", g.cap, "dimension cap for truncated objects")->check(CLI::Range(0, 8));
    app.add_option("--M", g.M, "Gamma truncation / unraveling bound")->check(CLI::Range(1, 64));
    app.add_option("--budget", g.budget, "search budget in states");
    app.add_option("--out", g.out, "write the result here instead of standard output");
    app.add_option("--seed", g.seed, "seed for sampled suites");

    // build
    auto* build = app.add_subcommand("build", "construct a simplicial set and write it");
    build->require_subcommand(1);
    std::string group = "Z/2", category_file;
    int degree = 2;
    auto* b_nerve = build->add_subcommand("nerve", "nerve of a finite category or group");
    auto* b_milnor = build->add_subcommand("milnor", "Milnor model of B pi x Gamma_M");
    auto* b_segal = build->add_subcommand("segal", "nerve of the category C_M");
    auto* b_em = build->add_subcommand("em", "Eilenberg-MacLane model K(pi, n)");
    for (auto* sc : {b_nerve, b_milnor, b_segal, b_em}) sc->add_option("--group", group, "Z/n, products such as Z/2xZ/2, or S3");
    for (auto* sc : {b_nerve, b_segal}) sc->add_option("--category", category_file, "category file");
    b_em->add_option("--degree", degree, "n")->check(CLI::Range(1, 6));

    // check kan
    auto* check = app.add_subcommand("check", "structural checks");
    check->require_subcommand(1);
    auto* c_kan = check->add_subcommand("kan", "search for unfillable horns");
    std::string input;
    int max_dim = 2;
    c_kan->add_option("--input", input, "simplicial set file")->required();
    c_kan->add_option("--max-dim", max_dim, "largest horn dimension");
    auto* c_rt = check->add_subcommand("roundtrip", "reload a set or model file and write it again");
    c_rt->add_option("--input", input, "simplicial set or Eilenberg-MacLane file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suite_ids;
    for (const auto& [id, fn] : suite_table()) suite_ids.push_back(id);
    std::string suite;
    bool all = false;
    unsigned jobs = 1;
    int max_n = 2;
    auto* v_suite = verify->add_option("--suite", suite, "suite id")->check(CLI::IsMember(suite_ids));
    auto* v_all = verify->add_flag("--all", all, "run every suite");
    v_suite->excludes(v_all);
    verify->add_option("--input", input, "simplicial set for suites that take one");
    verify->add_option("--jobs", jobs, "suites run concurrently")->check(CLI::Range(1u, 64u));
    verify->add_option("--max-n", max_n, "largest degree for chain suites")->check(CLI::Range(0, 3));

    // seminorm / isometry
    auto* sn = app.add_subcommand("seminorm", "exact l-infinity semi-norm of a cohomology class");
    std::string class_file, mode_name = "full";
    sn->add_option("--input", input, "simplicial set file")->required();
    sn->add_option("--degree", degree, "n")->required();
    sn->add_option("--class-file", class_file, "cocycle file")->required();
    sn->add_option("--mode", mode_name, "full or normalized cochains")->check(CLI::IsMember({"full", "normalized"}));

    auto* iso = app.add_subcommand("isometry", "compare semi-norms along an induced map");
    std::string source_file, target_file, map_file;
    iso->add_option("--source", source_file, "domain K")->required();
    iso->add_option("--target", target_file, "codomain L")->required();
    iso->add_option("--map", map_file, "map file f : K -> L")->required();
    iso->add_option("--degree", degree, "n")->required();
    iso->add_option("--mode", mode_name, "full or normalized cochains")->check(CLI::IsMember({"full", "normalized"}));

    // postnikov, pi1, minimal
    auto* pk = app.add_subcommand("postnikov", "Postnikov quotient and its laws");
    int level = 1;
    pk->add_option("--input", input, "simplicial set file")->required();
    pk->add_option("--level", level, "n")->required();
    auto* pi1 = app.add_subcommand("pi1", "fundamental group of a one-vertex Kan set");
    pi1->add_option("--input", input, "simplicial set file")->required();
    auto* mn = app.add_subcommand("minimal", "search for distinct homotopic simplices");
    mn->add_option("--input", input, "simplicial set file")->required();
    mn->add_option("--max-dim", max_dim, "largest dimension searched");

    // unravel / bundle
    auto* un = app.add_subcommand("unravel", "unraveling chain suites");
    un->require_subcommand(1);
    auto* un_v = un->add_subcommand("verify", "run an unraveling suite");
    std::string un_suite;
    un_v->add_option("--suite", un_suite, "cn, kn, coherence or homotopy")->required()->check(CLI::IsMember({"cn", "kn", "coherence", "homotopy"}));
    un_v->add_option("--M", g.M, "bound on Gamma entries")->check(CLI::Range(1, 64));
    un_v->add_option("--max-n", max_n, "largest degree")->check(CLI::Range(0, 3));
    auto* bu = app.add_subcommand("bundle", "K(pi,n)-bundle suites");
    bu->require_subcommand(1);
    auto* bu_v = bu->add_subcommand("verify", "run a bundle suite");
    std::string bu_suite;
    bu_v->add_option("--suite", bu_suite, "translations, transitivity or homotopy")->required()->check(
        CLI::IsMember({"translations", "transitivity", "homotopy"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    try {
        if (b_nerve->parsed()) return emit(g, to_json(nerve(category_arg(group, category_file), g.cap)));
        if (b_milnor->parsed()) return emit(g, to_json(milnor_space(parse_group(group), g.M, g.cap).set));
        if (b_segal->parsed()) return emit(g, to_json(nerve(segal_category(category_arg(group, category_file), g.M).category, g.cap)));
        if (b_em->parsed()) return emit(g, to_json(EMModel(parse_group(group), degree, g.cap)));

        if (c_kan->parsed()) {
            auto K = load_set(input);
            auto rep = kan_check(K, max_dim, g.budget);
            Json j{{"check", "kan"}, {"input", input}, {"max_dim", max_dim}, {"status", to_string(rep.status)},
                   {"horns", rep.horns}, {"pass", rep.is_kan()}};
            Json w = Json::array();
            for (const auto& h : rep.unfillable) {
                Json faces = Json::array();
                for (int i = 0; i <= h.n; ++i)
                    if (i != h.k) faces.push_back(Json::array({h.n - 1, h.faces[static_cast<std::size_t>(i)]}));
                w.push_back({{"n", h.n}, {"k", h.k}, {"faces", faces}});
            }
            j["witnesses"] = w;
            return emit(g, j, rep.is_kan());
        }

        if (c_rt->parsed()) {
            auto text = read_file(input);
            auto j = parse_json(text);
            auto again = dump(j.contains("cocycle_values") ? to_json(em_from_json(j)) : to_json(set_from_json(j)));
            if (g.out.empty()) std::cout << again;
            else write_file(g.out, again);
            return again == text ? 0 : 1;
        }

        if (verify->parsed()) {
            if (!all && suite.empty()) {
                std::cerr << "verify needs --suite or --all\n" << verify->help();
                return 2;
            }
            auto o = suite_options(g, max_n);
            if (!input.empty()) {
                o.input = load_set(input);
                o.input_name = input;
            }
            std::vector<std::string> ids = all ? suite_ids : std::vector<std::string>{suite};
            return run_suites(g, ids, o, jobs);
        }

        if (sn->parsed()) {
            auto K = load_set(input);
            auto z = rational_cochain_from_json(parse_json(read_file(class_file)), K);
            if (z.degree != degree) throw ParseError("class file has degree " + std::to_string(z.degree));
            auto mode = mode_name == "full" ? CochainMode::full : CochainMode::normalized;
            auto cert = seminorm(K, z, mode);
            Json j = to_json(cert);
            j["verified"] = verify_certificate(K, z, cert);
            return emit(g, j, j["verified"].get<bool>());
        }

        if (iso->parsed()) {
            auto K = load_set(source_file), L = load_set(target_file);
            auto f = load_map(map_file, K, L);
            auto mode = mode_name == "full" ? CochainMode::full : CochainMode::normalized;
            auto rep = isometry_report(K, L, f, degree, mode);
            Json norms = Json::array();
            for (const auto& [a, b] : rep.norms) norms.push_back(Json::array({rational_json(a), rational_json(b)}));
            Json j{{"degree", degree}, {"mode", to_string(mode)}, {"source_betti", rep.source_betti},
                   {"target_betti", rep.target_betti}, {"bijective", rep.bijective}, {"isometric", rep.isometric},
                   {"nonincreasing", rep.nonincreasing}, {"norms", norms}};
            return emit(g, j, rep.nonincreasing);
        }

        if (pk->parsed()) {
            auto K = load_set(input);
            auto rep = check_postnikov(K, level);
            auto Q = postnikov_quotient(K, level);
            std::vector<std::pair<std::string, bool>> checks = {{"compatible", rep.compatible},
                                                                {"skeleton_bijective", rep.skeleton_bijective},
                                                                {"tower_laws", rep.tower_laws},
                                                                {"singletons_low", rep.singletons_low}};
            Json j{{"level", level}, {"checks", checks_json(checks)}, {"quotient", to_json(Q.set)}};
            return emit(g, j, all_pass(checks));
        }

        if (pi1->parsed()) {
            auto K = load_set(input);
            auto pi = fundamental_group(K, g.budget);
            bool iso = f_group_check(K, pi);
            Json j{{"group", to_json(pi.group)}, {"class_of_edge", pi.class_of_edge},
                   {"well_defined", pi.well_defined}, {"classifying_iso", iso}};
            return emit(g, j, pi.well_defined && iso);
        }

        if (mn->parsed()) {
            auto K = load_set(input);
            auto rep = is_minimal(K, max_dim, g.budget);
            Json j{{"status", to_string(rep.status)}, {"minimal", rep.is_minimal()}};
            if (rep.witness) j["witness"] = Json::array({simplex_ref(rep.witness->first), simplex_ref(rep.witness->second)});
            return emit(g, j, rep.status != SearchStatus::undecided);
        }

        if (un_v->parsed()) {
            static const std::map<std::string, std::string> ids = {
                {"cn", "cn"}, {"kn", "kn"}, {"coherence", "coherence"}, {"homotopy", "main-homotopy"}};
            return run_suites(g, {ids.at(un_suite)}, suite_options(g, max_n), 1);
        }

        if (bu_v->parsed()) {
            std::vector<std::string> ids;
            if (bu_suite == "translations") ids = {"translation-cocycle", "cocycles-translations", "translations-composition"};
            else if (bu_suite == "transitivity") ids = {"transitivity-bundle"};
            else ids = {"translations-homotopy"};
            return run_suites(g, ids, suite_options(g, max_n), 1);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
