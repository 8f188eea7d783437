#include "cli.hpp"

#include "lgp/branching.hpp"
#include "lgp/generators.hpp"
#include "lgp/oracle.hpp"
#include "lgp/treewidth.hpp"
#include "lgp/vertex_cover.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace lgp::cli {

namespace {

struct Instance {
    std::string name;
    std::string family;
    Graph graph;
};

std::vector<Instance> smoke_instances(std::uint64_t seed) {
    gen::Rng rng(seed);
    std::vector<Instance> out;
    out.push_back({"er-12", "erdos-renyi", gen::erdos_renyi(12, 0.35, 4, rng)});
    out.push_back({"tree-14", "tree", gen::random_tree(14, rng)});
    out.push_back({"split-4-8", "split", gen::split_graph(4, 8, 0.4, rng)});
    return out;
}

struct Run {
    std::string value;
    std::string nodes;
};

}  // namespace

std::vector<BenchRow> run_bench(const std::string& suite, std::uint64_t seed, unsigned threads) {
    if (suite != "smoke") throw std::invalid_argument("unknown bench suite '" + suite + "'");
    constexpr std::size_t k = 3;

    using Method = std::function<Run(const ProblemSpec&, const Graph&)>;
    const std::vector<std::pair<std::string, Method>> methods = {
        {"alg1",
         [&](const ProblemSpec& s, const Graph& g) {
             auto r = alg1(s, g, k, {threads});
             return Run{r.solution.value.to_string(), std::to_string(r.stats.nodes_visited)};
         }},
        {"alg2",
         [&](const ProblemSpec& s, const Graph& g) {
             Alg2Options o;
             o.threads = threads;
             auto r = alg2(s, g, k, o);
             return Run{r.solution.value.to_string(), std::to_string(r.stats.nodes_visited)};
         }},
        {"tw", [&](const ProblemSpec& s, const Graph& g) {
             return Run{solve_tw(s, g, k, {threads}).solution.value.to_string(), ""};
         }},
        {"vc",
         [&](const ProblemSpec& s, const Graph& g) {
             VcOptions o;
             o.threads = threads;
             return Run{solve_vc(s, g, k, o).solution.value.to_string(), ""};
         }},
        {"oracle", [&](const ProblemSpec& s, const Graph& g) {
             return Run{brute_force_opt(s, g, k, {1e7, threads}).value.to_string(), ""};
         }},
    };
    const std::vector<std::pair<std::string, ProblemSpec>> specs = {{"max-cut", presets::max_cut()},
                                                                     {"densest", presets::densest()}};

    std::vector<BenchRow> rows;
    for (const auto& inst : smoke_instances(seed)) {
        for (const auto& [spec_name, spec] : specs) {
            for (const auto& [method_name, method] : methods) {
                if (method_name == "alg1" && !is_degrading(spec)) continue;
                const auto start = std::chrono::steady_clock::now();
                const Run run = method(spec, inst.graph);
                const auto stop = std::chrono::steady_clock::now();
                rows.push_back({inst.name, inst.family, inst.graph.num_vertices(), inst.graph.num_edges(),
                                inst.graph.max_degree(), k, spec_name, method_name, run.value, run.nodes,
                                std::chrono::duration<double, std::milli>(stop - start).count()});
            }
        }
    }
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << bench_csv_header << '\n';
    for (const auto& r : rows) {
        out << r.instance << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.max_degree << ',' << r.k << ','
            << r.spec << ',' << r.method << ',' << r.value << ',' << r.nodes_visited << ',' << r.time_ms << '\n';
    }
}

}  // namespace lgp::cli
