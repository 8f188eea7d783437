#pragma once

#include "lgp/problem.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lgp {

struct BranchStats {
    std::uint64_t nodes_visited = 0;
    std::size_t max_depth = 0;
    std::uint64_t leaves = 0;

    friend bool operator==(const BranchStats&, const BranchStats&) = default;
};

struct BranchResult {
    Solution solution;
    BranchStats stats;
};

/// Key used by alg1 to pick the vertex whose closed neighborhood is branched on.
enum class GreedyKey {
    /// val(T ∪ {v}). Sound for every degrading objective.
    partial_value,
    /// δ(v, T ∪ {v}) as literally stated for the algorithm. Can miss the optimum
    /// when v is adjacent to T and α2 != 0 (max-cut, coverage); kept for study.
    contribution,
};

struct Alg1Options {
    unsigned threads = 1;
    GreedyKey key = GreedyKey::partial_value;
};

/// Greedy branching for degrading objectives: pick the best vertex v outside T
/// by the greedy key, then branch on every w ∈ N[v] \ T. Depth k, arity <= Δ+1.
///
/// Throws UnsupportedProblem for non-degrading specs (use alg2) and
/// ContractViolation when k > n.
BranchResult alg1(const ProblemSpec& spec, const Graph& g, std::size_t k, const Alg1Options& options = {});

enum class Alg2Branching {
    /// Branch on the members of each best connected set S_1..S_r.
    members,
    /// Branch on N[S_i] \ T. Exact for every objective; arity up to (Δ+1)·k(k+1)/2.
    closed_neighborhood,
};

struct Alg2Options {
    unsigned threads = 1;
    Alg2Branching branching = Alg2Branching::members;
    /// Restricts T and every candidate set to this universe; values are still
    /// measured in the whole graph.
    std::optional<VertexSet> allowed;
};

/// Branching on greedily chosen connected sets: at a node with r vertices left
/// to take, for each size i in 1..r find the connected set S_i ⊆ V \ T
/// optimizing val(T ∪ S_i), then branch on T ∪ {v} for v in the union of the S_i.
///
/// With Alg2Branching::members this is exact whenever (α1 - 2α2) does not work
/// against the goal (all non-degrading objectives and α2 = α1/2).
///
/// Returns nullopt only if `allowed` leaves fewer than k vertices reachable.
struct Alg2Result {
    std::optional<Solution> solution;
    BranchStats stats;
};
Alg2Result alg2_search(const ProblemSpec& spec, const Graph& g, std::size_t k, const Alg2Options& options = {});

/// alg2_search without a restriction; always finds a solution.
BranchResult alg2(const ProblemSpec& spec, const Graph& g, std::size_t k, const Alg2Options& options = {});

/// Among S ⊆ V \ T with |S| = i and G[S] connected, one optimizing val(T ∪ S),
/// ties to the lexicographically smallest; nullopt when none exists.
std::optional<VertexSet> best_connected_extension(const ProblemSpec& spec, const Graph& g, const VertexSet& taken,
                                                  std::size_t size, const VertexSet* allowed = nullptr);

/// best_connected_extension for every size 1..max_size in one enumeration pass;
/// element i-1 holds the answer for size i.
std::vector<std::optional<VertexSet>> best_connected_extensions(const ProblemSpec& spec, const Graph& g,
                                                                const VertexSet& taken, std::size_t max_size,
                                                                const VertexSet* allowed = nullptr);

/// Σ_{d=0..depth} arity^d, saturating at UINT64_MAX.
std::uint64_t tree_size_bound(std::uint64_t arity, std::size_t depth);

}  // namespace lgp
