#pragma once

#include "lgp/problem.hpp"

#include <cstdint>
#include <optional>

namespace lgp {

/// Minimum vertex cover by bounded branching on an uncovered edge (take one
/// endpoint or the other) with increasing budgets.
VertexSet min_vertex_cover(const Graph& g);

struct VcStats {
    std::size_t cover_size = 0;
    /// Number of subsets X of the cover that were completed.
    std::uint64_t subsets_enumerated = 0;

    friend bool operator==(const VcStats&, const VcStats&) = default;
};

struct VcResult {
    Solution solution;
    VcStats stats;
    VertexSet cover;
};

struct VcOptions {
    unsigned threads = 1;
    /// Vertex cover to enumerate over; computed with min_vertex_cover when absent.
    std::optional<VertexSet> cover;
};

/// Enumerates every X ⊆ C with |X| <= k and k - |X| <= |V \ C|, then completes X
/// with the k - |X| vertices u of the independent set V \ C whose score
/// (α1 - α2)·|E(u, X)| + α2·|E(u, C \ X)| is best under the goal (ties to the
/// smallest id).
///
/// Throws ContractViolation when k > n or when the supplied cover misses an edge.
VcResult solve_vc(const ProblemSpec& spec, const Graph& g, std::size_t k, const VcOptions& options = {});

}  // namespace lgp
