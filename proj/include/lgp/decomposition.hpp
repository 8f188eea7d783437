#pragma once

#include "lgp/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgp {

/// Tree decomposition: bags indexed by node, plus the tree edges between nodes.
struct TreeDecomposition {
    /// Each bag sorted ascending, without duplicates.
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

    std::size_t num_nodes() const noexcept { return bags.size(); }
    /// Largest bag size minus one; 0 for an empty decomposition.
    std::size_t width() const;
};

enum class DecompositionViolation {
    none,
    /// The node graph is not a tree (cycle, disconnected, bad node id) or a bag is malformed.
    not_a_tree,
    /// (i) some vertex is in no bag.
    vertex_not_covered,
    /// (ii) some edge has no bag containing both endpoints.
    edge_not_covered,
    /// (iii) the nodes containing some vertex do not form a subtree.
    not_connected,
};

struct DecompositionReport {
    DecompositionViolation violation = DecompositionViolation::none;
    std::string detail;

    bool ok() const noexcept { return violation == DecompositionViolation::none; }
};

std::string_view to_string(DecompositionViolation v);

/// Checks the tree shape and the three decomposition conditions, reporting the
/// first violation found together with a witness.
DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& d);

/// Decomposition induced by eliminating vertices in `order` (a permutation of V).
TreeDecomposition elimination_decomposition(const Graph& g, std::span<const Vertex> order);

/// Greedy minimum-degree elimination ordering (ties to the smallest id).
std::vector<Vertex> min_degree_ordering(const Graph& g);

/// elimination_decomposition over min_degree_ordering. Width is an upper bound on tw(G).
TreeDecomposition heuristic_decomposition(const Graph& g);

/// PACE-style text: "s td <nodes> <width+1> <n>", "b <node> <v>..." with 1-based
/// node ids and 0-based vertices, then "<node> <node>" tree edges; 'c' comments.
TreeDecomposition parse_decomposition(std::string_view text);
TreeDecomposition load_decomposition(const std::string& path);
std::string format_decomposition(const TreeDecomposition& d, std::size_t n);

}  // namespace lgp
