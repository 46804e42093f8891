#include "flg/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "flg/errors.hpp"
#include "flg/generators.hpp"
#include "flg/json_io.hpp"
#include "flg/solver.hpp"
#include "flg/stability.hpp"
#include "flg/uniform.hpp"

namespace flg {

namespace {

struct CommonArgs {
    std::string instance_path;
    std::string placement_csv;
    std::string method = "exact";
    double tol = 1e-12;
    int jobs = 1;
    unsigned long long support_budget = 2000000;
    bool decimal = false;
};

double default_tol() {
    if (const char* env = std::getenv("FLG_DEFAULT_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e-12;
}

SolveOptions make_options(const CommonArgs& c) {
    SolveOptions opts;
    if (c.method == "exact")
        opts.method = Method::Exact;
    else if (c.method == "iterative")
        opts.method = Method::Iterative;
    else
        opts.method = Method::Auto;
    opts.tol = c.tol;
    opts.threads = c.jobs;
    opts.support_budget = c.support_budget;
    return opts;
}

Placement start_placement(const Instance& inst, const std::string& spec,
                          unsigned long long seed) {
    if (spec == "random") {
        std::mt19937_64 rng(seed);
        Placement s(inst.facility_count());
        for (auto& loc : s) loc = static_cast<int>(rng() % inst.node_count());
        return s;
    }
    Placement s = parse_placement(inst, spec);
    validate_placement(inst, s);
    return s;
}

int cmd_solve(const CommonArgs& c, std::ostream& out) {
    const Instance inst = load_instance_file(c.instance_path);
    const Placement s = parse_placement(inst, c.placement_csv);
    validate_placement(inst, s);
    const EquilibriumReport rep = solve_min(inst, s, make_options(c));
    out << report_json(inst, rep, c.decimal).dump(2) << "\n";
    return 0;
}

int cmd_check_spe(const CommonArgs& c, const std::string& alpha_str, std::ostream& out) {
    const Instance inst = load_instance_file(c.instance_path);
    const Placement s = parse_placement(inst, c.placement_csv);
    validate_placement(inst, s);
    const Rational alpha = parse_rational(alpha_str);
    const StabilityReport rep = check_stability(inst, s, alpha, make_options(c));
    out << stability_json(inst, rep, c.decimal).dump(2) << "\n";
    if (rep.verdict == Verdict::Inconclusive)
        throw SolverError("stability check inconclusive at the configured tolerance");
    return rep.verdict == Verdict::Stable ? 0 : 1;
}

int cmd_find_spe(const CommonArgs& c, const std::string& alpha_str, unsigned long long budget,
                 std::ostream& out) {
    const Instance inst = load_instance_file(c.instance_path);
    const Rational alpha = parse_rational(alpha_str);
    const auto witness = find_spe(inst, alpha, make_options(c), budget);
    Json doc;
    doc["alpha"] = rational_str(alpha);
    doc["spe"] = witness ? Json(placement_ids(inst, *witness)) : Json();
    out << doc.dump(2) << "\n";
    return witness ? 0 : 1;
}

int cmd_approx_spe(const CommonArgs& c, const std::string& eps_str, const std::string& start_spec,
                   unsigned long long seed, const std::string& trace_path, long max_steps,
                   std::ostream& out) {
    const Instance inst = load_instance_file(c.instance_path);
    const Rational epsilon = parse_rational(eps_str);
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    const Placement start = start_placement(inst, start_spec, seed);

    DynamicsTrace trace;
    const auto [placement, report] =
        compute_approx_spe(inst, epsilon, start, make_options(c), max_steps, &trace);

    if (!trace_path.empty()) {
        std::ostringstream lines;
        for (const auto& step : trace.steps) lines << trace_step_json(inst, step).dump() << "\n";
        write_file(trace_path, lines.str());
    }
    Json doc;
    doc["epsilon"] = rational_str(epsilon);
    doc["alpha"] = rational_str(report.alpha);
    doc["start"] = placement_ids(inst, start);
    doc["placement"] = placement_ids(inst, placement);
    doc["steps"] = trace.step_count();
    doc["trace_path"] = trace_path.empty() ? Json() : Json(trace_path);
    doc["stability"] = stability_json(inst, report, c.decimal);
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_potential(const CommonArgs& c, std::ostream& out) {
    const Instance inst = load_instance_file(c.instance_path);
    const Placement s = parse_placement(inst, c.placement_csv);
    validate_placement(inst, s);
    Json doc;
    doc["potential"] = rational_str(potential(inst, s));
    out << doc.dump(2) << "\n";
    return 0;
}

struct GenerateArgs {
    std::string family;
    std::string out_path;
    std::string mapping_path;
    std::string graph_path;
    int t = 2;
    int k = 1;
    int n = 8;
    double edge_prob = 0.3;
    int weight_max = 4;
    unsigned long long seed = 0;
};

int cmd_generate(const GenerateArgs& g, std::ostream& out) {
    Instance inst = gen_gstar();
    Json mapping;
    bool has_mapping = false;

    if (g.family == "gstar") {
        inst = gen_gstar();
    } else if (g.family == "fig1-left") {
        inst = gen_fig1(true);
    } else if (g.family == "fig1-right") {
        inst = gen_fig1(false);
    } else if (g.family == "lowerbound") {
        inst = gen_lowerbound(g.t);
    } else if (g.family == "is-reduction") {
        if (g.graph_path.empty()) throw InputError("is-reduction needs --graph");
        const IsReduction red = gen_is_reduction(load_graph_file(g.graph_path, false), g.k);
        inst = red.instance;
        mapping = is_mapping_json(red);
        has_mapping = true;
    } else if (g.family == "maxcut-reduction") {
        if (g.graph_path.empty()) throw InputError("maxcut-reduction needs --graph");
        const MaxCutReduction red = gen_maxcut_reduction(load_graph_file(g.graph_path, true));
        inst = red.instance;
        mapping = maxcut_mapping_json(red);
        has_mapping = true;
    } else if (g.family == "random") {
        inst = gen_random(g.n, g.edge_prob, g.weight_max, g.k, g.seed);
    } else {
        throw InputError("unknown family '" + g.family + "'");
    }

    const std::string text = save_instance(inst);
    if (!g.mapping_path.empty()) {
        if (!has_mapping) throw InputError("family '" + g.family + "' has no mapping");
        write_file(g.mapping_path, mapping.dump(2) + "\n");
    }
    if (g.out_path.empty()) {
        out << text;
    } else {
        write_file(g.out_path, text);
        Json doc;
        doc["written"] = Json::array({g.out_path});
        if (!g.mapping_path.empty()) doc["written"].push_back(g.mapping_path);
        out << doc.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-sided facility location game engine"};
    app.require_subcommand(1);

    CommonArgs common;
    common.tol = default_tol();
    std::string alpha = "1";
    unsigned long long placement_budget = 2000000;
    std::string epsilon;
    std::string start_spec = "random";
    unsigned long long seed = 0;
    std::string trace_path;
    long max_steps = -1;
    GenerateArgs gen;

    enum class MethodSet { SolveOnly, WithAuto, None };
    const auto add_common = [&](CLI::App* cmd, bool with_placement, MethodSet methods) {
        cmd->add_option("--instance", common.instance_path, "instance JSON file")->required();
        if (with_placement)
            cmd->add_option("--placement", common.placement_csv, "comma-separated node ids")
                ->required();
        if (methods == MethodSet::SolveOnly)
            cmd->add_option("--method", common.method, "exact|iterative")
                ->check(CLI::IsMember({"exact", "iterative"}));
        else if (methods == MethodSet::WithAuto)
            cmd->add_option("--method", common.method, "auto|exact|iterative")
                ->check(CLI::IsMember({"auto", "exact", "iterative"}));
        cmd->add_option("--tol", common.tol, "iterative tolerance");
        cmd->add_option("--jobs", common.jobs, "worker threads (0 = all cores)");
        cmd->add_option("--support-budget", common.support_budget,
                        "pattern budget for the exact oracle");
        cmd->add_flag("--decimal", common.decimal, "render rationals as decimals");
    };

    auto* solve = app.add_subcommand("solve", "client equilibrium for a fixed placement");
    add_common(solve, true, MethodSet::SolveOnly);

    auto* check = app.add_subcommand("check-spe", "verify (approximate) stability");
    add_common(check, true, MethodSet::WithAuto);
    check->add_option("--alpha", alpha, "stability factor (rational, >= 1)");

    auto* find = app.add_subcommand("find-spe", "exhaustive equilibrium search");
    add_common(find, false, MethodSet::WithAuto);
    find->add_option("--alpha", alpha, "stability factor (rational, >= 1)");
    find->add_option("--budget", placement_budget, "max placement multisets");

    auto* approx = app.add_subcommand("approx-spe", "uniform-proxy approximate equilibrium");
    add_common(approx, false, MethodSet::WithAuto);
    approx->add_option("--epsilon", epsilon, "dynamics threshold (rational, > 0)")->required();
    approx->add_option("--start", start_spec, "comma-separated node ids or 'random'");
    approx->add_option("--seed", seed, "seed for --start random");
    approx->add_option("--trace-out", trace_path, "write the dynamics trace (JSON lines)");
    approx->add_option("--max-steps", max_steps, "step limit (default: documented ceiling)");

    auto* pot = app.add_subcommand("potential", "uniform-game potential of a placement");
    add_common(pot, true, MethodSet::None);

    auto* generate = app.add_subcommand("generate", "emit instance families");
    generate
        ->add_option("family", gen.family,
                     "gstar|fig1-left|fig1-right|lowerbound|is-reduction|maxcut-reduction|random")
        ->required();
    generate->add_option("--out", gen.out_path, "output instance file (stdout if omitted)");
    generate->add_option("--mapping-out", gen.mapping_path, "output mapping file (reductions)");
    generate->add_option("--graph", gen.graph_path, "input graph JSON (reductions)");
    generate->add_option("--t", gen.t, "lowerbound family parameter");
    generate->add_option("--k", gen.k, "reduction parameter / facility count");
    generate->add_option("--n", gen.n, "random family node count");
    generate->add_option("--edge-prob", gen.edge_prob, "random family edge probability");
    generate->add_option("--weight-max", gen.weight_max, "random family weight bound");
    generate->add_option("--seed", gen.seed, "random family seed");

    std::vector<const char*> argv;
    argv.push_back("flg");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    // check/find/approx prefer the exact oracle but may fall back to the
    // iterative solver unless a method is pinned explicitly.
    for (CLI::App* cmd : {check, find, approx})
        if (cmd->parsed() && cmd->count("--method") == 0) common.method = "auto";

    try {
        if (solve->parsed()) return cmd_solve(common, out);
        if (check->parsed()) return cmd_check_spe(common, alpha, out);
        if (find->parsed()) return cmd_find_spe(common, alpha, placement_budget, out);
        if (approx->parsed())
            return cmd_approx_spe(common, epsilon, start_spec, seed, trace_path, max_steps, out);
        if (pot->parsed()) return cmd_potential(common, out);
        if (generate->parsed()) return cmd_generate(gen, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    err << "no command\n";
    return 2;
}

}  // namespace flg
