#pragma once

#include "lgp/graph.hpp"

#include <cstdint>
#include <random>

namespace lgp::gen {

using Rng = std::mt19937_64;

/// G(n, p) where an edge is skipped if it would push either endpoint past max_degree.
Graph erdos_renyi(std::size_t n, double p, std::size_t max_degree, Rng& rng);

/// Uniform random recursive tree: vertex i attaches to a random earlier vertex.
Graph random_tree(std::size_t n, Rng& rng);

/// Clique on [0, clique) plus an independent set whose members each connect to
/// clique vertices with probability p.
Graph split_graph(std::size_t clique, std::size_t independent, double p, Rng& rng);

/// Adds random edges until every vertex has degree at least r (when possible).
Graph raise_min_degree(const Graph& g, std::size_t r, Rng& rng);

Graph empty_graph(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Center 0 with leaves 1..leaves.
Graph star(std::size_t leaves);
/// Vertices of b are shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace lgp::gen
