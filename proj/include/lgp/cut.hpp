#pragma once

#include "lgp/oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lgp {

struct SwapResult {
    Solution solution;
    std::size_t swaps = 0;
    /// Cut value before the first swap and after each swap.
    std::vector<std::int64_t> cut_trace;
    /// min{n - k, r·k} with r the minimum degree.
    std::int64_t guarantee = 0;
};

/// Starts from V' = {0, ..., k-1} and, while some v outside V' has no neighbor
/// in V' and some v' in V' has fewer than r neighbors outside, swaps them.
/// Throws ContractViolation when k > n.
SwapResult swap_construct(const Graph& g, std::size_t k);

/// Is there a k-subset with cut at least p? Tries the swap construction, then
/// the max-degree construction (when Δ <= n - k), then alg1. `method` names
/// the stage that decided.
Decision max_cut_standard(const Graph& g, std::size_t k, const Rational& p);

/// Is there a k-subset with cut at most p? Works on the smaller side
/// s = min(k, n - k): vertices of degree >= s + p are barred and alg2 looks for
/// an s-subset over the rest; the complement is returned when s = n - k.
Decision min_cut_pk(const Graph& g, std::size_t k, const Rational& p);

/// Is there a k-subset with cut at most p? For every set B of at most p
/// vertices, completes B with whole components of G - B chosen by
/// component_knapsack. Throws UnsupportedProblem when p > k.
Decision min_cut_np(const Graph& g, std::size_t k, const Rational& p, unsigned threads = 1);

struct KnapsackItem {
    std::size_t size = 0;
    std::int64_t alpha = 0;
};

/// Indices (ascending) of items whose sizes sum to exactly `target` with the
/// largest total alpha; nullopt when no subset reaches the target.
std::optional<std::vector<std::size_t>> component_knapsack(const std::vector<KnapsackItem>& items,
                                                           std::size_t target);

}  // namespace lgp
