#include "cli.hpp"

#include "lgp/approx.hpp"
#include "lgp/branching.hpp"
#include "lgp/cut.hpp"
#include "lgp/enumerate.hpp"
#include "lgp/errors.hpp"
#include "lgp/oracle.hpp"
#include "lgp/treewidth.hpp"
#include "lgp/vertex_cover.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

namespace lgp::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Distinguishes a method precondition failure from a method/spec mismatch.
class PreconditionFailed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json vertices_json(const VertexSet& s) { return Json(s.members()); }

Json graph_json(const Graph& g) {
    return Json{{"n", g.num_vertices()}, {"m", g.num_edges()}, {"max_degree", g.max_degree()}};
}

Json branch_json(const BranchStats& s) {
    return Json{{"nodes_visited", s.nodes_visited}, {"max_depth", s.max_depth}, {"leaves", s.leaves}};
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct SolveArgs {
    std::string graph;
    std::string spec;
    std::size_t k = 0;
    std::optional<std::string> p;
    std::string method = "auto";
    std::optional<std::string> decomposition;
    double budget = 1e7;
    unsigned threads = 1;
    std::string alg2_branching = "members";
};

struct ApproxArgs {
    std::string graph;
    std::string problem = "max-cut";
    std::size_t k = 0;
    std::string epsilon;
    double budget = 1e7;
};

struct EnumArgs {
    std::string graph;
    Vertex root = 0;
    std::size_t max_size = 1;
    bool list = false;
};

struct ValidateArgs {
    std::string graph;
    std::string decomposition;
};

struct BenchArgs {
    std::string suite = "smoke";
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::optional<std::string> output;
};

struct Outcome {
    Json report;
    int status = exit_code::ok;
    std::string summary;
};

Outcome cmd_solve(const SolveArgs& a) {
    const Graph g = load_graph(a.graph);
    const ProblemSpec spec = parse_spec(a.spec);
    const std::optional<Rational> p = a.p ? std::optional(parse_rational(*a.p)) : std::nullopt;
    if (a.k > g.num_vertices()) {
        throw ContractViolation("k = " + std::to_string(a.k) + " exceeds n = " + std::to_string(g.num_vertices()));
    }

    std::string method = a.method;
    if (method == "auto") {
        if (a.decomposition) method = "tw";
        else method = is_degrading(spec) ? "alg1" : "alg2";
    }

    Json report;
    report["command"] = "solve";
    report["graph"] = graph_json(g);
    report["spec"] = spec.to_string();
    report["k"] = a.k;
    report["method"] = method;
    if (p) report["p"] = format_rational(*p);

    const auto start = std::chrono::steady_clock::now();
    std::optional<Solution> optimum;
    std::optional<Decision> decision;
    Json stats = Json::object();

    if (method == "alg1") {
        BranchResult r = alg1(spec, g, a.k, {a.threads});
        stats = branch_json(r.stats);
        optimum = std::move(r.solution);
    } else if (method == "alg2") {
        Alg2Options o;
        o.threads = a.threads;
        if (a.alg2_branching == "closed-neighborhood") o.branching = Alg2Branching::closed_neighborhood;
        else if (a.alg2_branching != "members") throw std::invalid_argument("unknown alg2 branching '" + a.alg2_branching + "'");
        BranchResult r = alg2(spec, g, a.k, o);
        stats = branch_json(r.stats);
        optimum = std::move(r.solution);
    } else if (method == "tw") {
        TwResult r = a.decomposition
                         ? solve_tw(spec, g, to_nice(g, load_decomposition(*a.decomposition)), a.k, {a.threads})
                         : solve_tw(spec, g, a.k, {a.threads});
        stats = Json{{"nice_nodes", r.stats.nice_nodes},
                     {"width", r.stats.width},
                     {"table_entries", r.stats.table_entries},
                     {"peak_live_entries", r.stats.peak_live_entries}};
        optimum = std::move(r.solution);
    } else if (method == "vc") {
        VcOptions o;
        o.threads = a.threads;
        VcResult r = solve_vc(spec, g, a.k, o);
        stats = Json{{"cover_size", r.stats.cover_size}, {"subsets_enumerated", r.stats.subsets_enumerated}};
        optimum = std::move(r.solution);
    } else if (method == "oracle") {
        optimum = brute_force_opt(spec, g, a.k, {a.budget, a.threads});
    } else if (method == "np" || method == "pk" || method == "standard") {
        const bool min_cut = method != "standard";
        if (spec != (min_cut ? presets::min_cut() : presets::max_cut())) {
            throw UnsupportedProblem("method " + method + " only decides " + (min_cut ? "min-cut" : "max-cut"));
        }
        if (!p) throw CLI::ValidationError("--p", "method " + method + " needs a threshold --p");
        if (method == "np") {
            if (*p > Rational(static_cast<std::int64_t>(a.k))) {
                throw PreconditionFailed("method np needs p <= k; use --method pk");
            }
            decision = min_cut_np(g, a.k, *p, a.threads);
        } else if (method == "pk") {
            decision = min_cut_pk(g, a.k, *p);
        } else {
            decision = max_cut_standard(g, a.k, *p);
        }
    } else {
        throw CLI::ValidationError("--method", "unknown method '" + method + "'");
    }

    if (optimum) {
        const Value recomputed = value(spec, g, optimum->vertices);
        if (!(recomputed == optimum->value)) throw std::logic_error("reported value does not match its vertex set");
        report["value"] = optimum->value.to_string();
        report["vertices"] = vertices_json(optimum->vertices);
        if (p) {
            const bool yes = meets_threshold(spec.goal(), optimum->value, *p);
            decision = Decision{yes, yes ? optimum : std::nullopt, method};
        }
    }
    report["trace"] = decision ? decision->method : method;
    report["stats"] = stats;

    Outcome out;
    if (decision) {
        report["decision"] = decision->yes ? "yes" : "no";
        report["witness"] = decision->witness ? vertices_json(decision->witness->vertices) : Json(nullptr);
        if (decision->witness) report["witness_value"] = decision->witness->value.to_string();
        out.status = decision->yes ? exit_code::ok : exit_code::no;
        out.summary = std::string(decision->yes ? "yes" : "no") + " (" + report["trace"].get<std::string>() + ")";
    } else {
        out.summary = "value " + report["value"].get<std::string>() + " via " + method;
    }
    report["time_ms"] = elapsed_ms(start);
    out.report = std::move(report);
    return out;
}

Outcome cmd_approx(const ApproxArgs& a) {
    const Graph g = load_graph(a.graph);
    const Rational eps = parse_rational(a.epsilon);
    const auto start = std::chrono::steady_clock::now();
    ApproxResult r;
    if (a.problem == "max-cut") r = approx_max_cut(g, a.k, eps);
    else if (a.problem == "min-cut") r = approx_min_cut(g, a.k, eps, {a.budget, 1});
    else throw CLI::ValidationError("--problem", "expected max-cut or min-cut");

    Json report;
    report["command"] = "approx";
    report["graph"] = graph_json(g);
    report["problem"] = a.problem;
    report["k"] = a.k;
    report["epsilon"] = format_rational(eps);
    report["mode"] = std::string(to_string(r.mode));
    report["guarantee"] = format_rational(r.guarantee);
    report["degree_sum"] = r.degree_sum;
    report["value"] = r.solution ? Json(r.solution->value.to_string()) : Json(nullptr);
    report["vertices"] = r.solution ? vertices_json(r.solution->vertices) : Json(nullptr);
    report["note"] = r.note;
    report["time_ms"] = elapsed_ms(start);

    Outcome out;
    out.status = r.solution ? exit_code::ok : exit_code::incompatible;
    out.summary = std::string(to_string(r.mode)) + (r.solution ? " value " + r.solution->value.to_string() : "");
    out.report = std::move(report);
    return out;
}

Outcome cmd_enum(const EnumArgs& a) {
    const Graph g = load_graph(a.graph);
    std::vector<std::uint64_t> by_size(a.max_size, 0);
    Json sets = Json::array();
    std::uint64_t count = 0;
    enumerate_connected(g, a.root, a.max_size, [&](const VertexSet& s) {
        ++count;
        ++by_size[s.size() - 1];
        if (a.list) sets.push_back(vertices_json(s));
    });
    Json report;
    report["command"] = "enum";
    report["graph"] = graph_json(g);
    report["root"] = a.root;
    report["max_size"] = a.max_size;
    report["count"] = count;
    report["by_size"] = by_size;
    if (a.list) report["sets"] = std::move(sets);
    return Outcome{std::move(report), exit_code::ok, std::to_string(count) + " connected sets"};
}

Outcome cmd_validate_td(const ValidateArgs& a) {
    const Graph g = load_graph(a.graph);
    const TreeDecomposition d = load_decomposition(a.decomposition);
    const DecompositionReport r = validate_decomposition(g, d);
    Json report;
    report["command"] = "validate-td";
    report["graph"] = graph_json(g);
    report["nodes"] = d.num_nodes();
    report["width"] = d.width();
    report["ok"] = r.ok();
    report["violation"] = std::string(to_string(r.violation));
    report["detail"] = r.detail;
    std::string summary = r.ok() ? "ok width " + std::to_string(d.width()) : std::string(to_string(r.violation));
    return Outcome{std::move(report), r.ok() ? exit_code::ok : exit_code::no, summary};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local graph partitioning solvers"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Optimize or decide a local partitioning problem");
    solve_cmd->add_option("--graph", solve.graph, "Edge-list or DIMACS graph file")->required();
    solve_cmd->add_option("--spec", solve.spec, "Preset name or goal=..,a1=..,a2=..")->required();
    solve_cmd->add_option("--k", solve.k, "Solution size")->required();
    solve_cmd->add_option("--p", solve.p, "Decision threshold (rational)");
    solve_cmd->add_option("--method", solve.method, "auto|alg1|alg2|tw|vc|oracle|np|pk|standard");
    solve_cmd->add_option("--decomposition", solve.decomposition, "Tree decomposition file for tw");
    solve_cmd->add_option("--budget", solve.budget, "Maximum subsets the oracle enumerates");
    solve_cmd->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--alg2-branching", solve.alg2_branching, "members|closed-neighborhood");

    ApproxArgs approx;
    auto* approx_cmd = app.add_subcommand("approx", "Fixed-parameter approximation for the cut problems");
    approx_cmd->add_option("--graph", approx.graph)->required();
    approx_cmd->add_option("--problem", approx.problem, "max-cut|min-cut");
    approx_cmd->add_option("--k", approx.k)->required();
    approx_cmd->add_option("--epsilon", approx.epsilon, "Rational in (0,1)")->required();
    approx_cmd->add_option("--budget", approx.budget);

    EnumArgs enumerate;
    auto* enum_cmd = app.add_subcommand("enum", "Count connected sets containing a root as their smallest vertex");
    enum_cmd->add_option("--graph", enumerate.graph)->required();
    enum_cmd->add_option("--root", enumerate.root)->required();
    enum_cmd->add_option("--max-size", enumerate.max_size)->required();
    enum_cmd->add_flag("--list", enumerate.list, "Include the sets themselves");

    ValidateArgs validate;
    auto* validate_cmd = app.add_subcommand("validate-td", "Check a tree decomposition against a graph");
    validate_cmd->add_option("--graph", validate.graph)->required();
    validate_cmd->add_option("--decomposition", validate.decomposition)->required();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a method matrix and print CSV rows");
    bench_cmd->add_option("--suite", bench.suite);
    bench_cmd->add_option("--seed", bench.seed);
    bench_cmd->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--output", bench.output, "Write the CSV here instead of stdout");

    std::vector<std::string> argv_storage{"lgp"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (bench_cmd->parsed()) {
            const auto rows = run_bench(bench.suite, bench.seed, bench.threads);
            if (bench.output) {
                std::ofstream file(*bench.output);
                if (!file) throw IoError("cannot write " + *bench.output);
                write_bench_csv(rows, file);
            } else {
                write_bench_csv(rows, out);
            }
            err << rows.size() << " bench rows\n";
            return exit_code::ok;
        }
        Outcome outcome;
        if (solve_cmd->parsed()) outcome = cmd_solve(solve);
        else if (approx_cmd->parsed()) outcome = cmd_approx(approx);
        else if (enum_cmd->parsed()) outcome = cmd_enum(enumerate);
        else outcome = cmd_validate_td(validate);
        out << outcome.report.dump(2) << '\n';
        err << outcome.summary << '\n';
        return outcome.status;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::budget;
    } catch (const PreconditionFailed& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::precondition;
    } catch (const UnsupportedProblem& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::incompatible;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
}

}  // namespace lgp::cli
