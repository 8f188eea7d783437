#pragma once

#include "lgp/decomposition.hpp"
#include "lgp/problem.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lgp {

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
    NiceKind kind = NiceKind::leaf;
    /// Sorted ascending.
    std::vector<Vertex> bag;
    /// Introduced or forgotten vertex; the bag's single vertex for a leaf.
    Vertex vertex = 0;
    std::vector<std::size_t> children;
};

/// Rooted nice tree decomposition. Nodes are stored children-first, so a
/// forward sweep over `nodes` is a valid bottom-up order; the root is the last
/// node and has an empty bag.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;

    bool empty() const noexcept { return nodes.empty(); }
    std::size_t root() const { return nodes.size() - 1; }
    std::size_t width() const;

    /// The same bags and tree as a plain decomposition.
    TreeDecomposition as_tree_decomposition() const;
};

/// Converts a valid decomposition of g into nice form of the same width:
/// forget-then-introduce chains adapt each child to its parent's bag, binary
/// joins merge siblings, leaves are grown from a singleton and extra forget
/// nodes empty the root bag. Throws ContractViolation when d is not valid for g.
NiceDecomposition to_nice(const Graph& g, const TreeDecomposition& d);

/// Structural check of the leaf/introduce/forget/join rules; returns an empty
/// string when they hold, otherwise a description of the first offending node.
std::string check_nice(const NiceDecomposition& nice);

/// Whether every introduced vertex has no neighbor among the vertices already
/// forgotten below its introduce node.
bool introduce_is_local(const Graph& g, const NiceDecomposition& nice);

struct TwStats {
    std::size_t nice_nodes = 0;
    std::size_t width = 0;
    /// Σ over nodes of 2^|bag| · (k+1).
    std::uint64_t table_entries = 0;
    /// Largest number of entries held at one time during the sweep.
    std::uint64_t peak_live_entries = 0;
};

struct TwResult {
    Solution solution;
    TwStats stats;
};

struct TwOptions {
    unsigned threads = 1;
};

/// Dynamic programming over a nice decomposition. Each node keeps a table of
/// 2^|bag| × (k+1) entries: entry [c, k'] is the best value over the edges of
/// the subgraph below the node when the bag is split by configuration c and
/// exactly k' already-forgotten vertices are taken. Forget and join keep the
/// goal-directed best; the optimum sits at the empty-bag root entry [∅, k], and
/// the witness is rebuilt from recorded choices.
///
/// Throws ContractViolation when k > n or when `nice` does not decompose g.
TwResult solve_tw(const ProblemSpec& spec, const Graph& g, const NiceDecomposition& nice, std::size_t k,
                  const TwOptions& options = {});

/// solve_tw on the nice form of heuristic_decomposition(g).
TwResult solve_tw(const ProblemSpec& spec, const Graph& g, std::size_t k, const TwOptions& options = {});

}  // namespace lgp
