#pragma once

#include "lgp/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lgp::cli {

namespace exit_code {
inline constexpr int ok = 0;
/// A decision query was answered "no".
inline constexpr int no = 1;
inline constexpr int usage = 2;
inline constexpr int budget = 3;
/// The method does not apply to the objective (alg1 on a non-degrading spec, ...).
inline constexpr int incompatible = 4;
/// A method precondition on the parameters failed (np with p > k).
inline constexpr int precondition = 5;
/// A graph or decomposition file could not be read or parsed.
inline constexpr int input = 6;
}  // namespace exit_code

/// Runs one command line (without the program name). Reports go to `out`,
/// summaries and errors to `err`; the return value is the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchRow {
    std::string instance;
    std::string family;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_degree = 0;
    std::size_t k = 0;
    std::string spec;
    std::string method;
    std::string value;
    /// Empty for methods without a branching tree.
    std::string nodes_visited;
    double time_ms = 0;
};

inline constexpr const char* bench_csv_header =
    "instance,family,n,m,max_degree,k,spec,method,value,nodes_visited,time_ms";

/// Runs the method matrix of a named suite ("smoke") over generated instances.
/// Throws std::invalid_argument for an unknown suite.
std::vector<BenchRow> run_bench(const std::string& suite, std::uint64_t seed, unsigned threads);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace lgp::cli
