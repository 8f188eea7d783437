#pragma once

#include "lgp/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace lgp {

using ConnectedSetVisitor = std::function<void(const VertexSet&)>;

/// Streams every vertex set S with root = min(S), |S| <= max_size and G[S]
/// connected, each exactly once.
///
/// Sets are grown by repeatedly taking the smallest-labeled member whose
/// neighbors are still undecided and fixing, once and for all, which of those
/// neighbors join. Only vertices greater than `root` are eligible, so the union
/// over all roots lists every connected set once. When `allowed` is given the
/// search stays inside it (root must belong to it).
///
/// Throws ContractViolation if root >= n or max_size == 0.
void enumerate_connected(const Graph& g, Vertex root, std::size_t max_size, const ConnectedSetVisitor& visit,
                         const VertexSet* allowed = nullptr);

std::vector<VertexSet> connected_sets(const Graph& g, Vertex root, std::size_t max_size);

std::uint64_t count_connected(const Graph& g, Vertex root, std::size_t max_size);

}  // namespace lgp
