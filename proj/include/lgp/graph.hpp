#pragma once

#include "lgp/vertex_set.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lgp {

/// Unordered edge in canonical form (u < v).
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and one bitset
/// per vertex so that edge counts over a vertex set are popcounts.
class Graph {
public:
    Graph() = default;

    /// Throws ContractViolation on self-loops, duplicate edges or ids >= n.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t num_vertices() const noexcept { return adjacency_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const;
    const VertexSet& neighbor_set(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    std::span<const Edge> edges() const noexcept { return edges_; }

    std::size_t max_degree() const noexcept { return max_degree_; }
    std::size_t min_degree() const noexcept { return min_degree_; }

    /// N(v), or N[v] when `closed`.
    VertexSet neighborhood(Vertex v, bool closed) const;

    VertexSet empty_set() const { return VertexSet(num_vertices()); }
    VertexSet all_vertices() const { return VertexSet::full(num_vertices()); }

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> adjacency_bits_;
    std::vector<Edge> edges_;
    std::size_t max_degree_ = 0;
    std::size_t min_degree_ = 0;
};

/// |E(S)|: edges with both endpoints in S.
std::size_t edges_within(const Graph& g, const VertexSet& s);

/// |E(S, V \ S)|: edges with exactly one endpoint in S.
std::size_t edges_crossing(const Graph& g, const VertexSet& s);

/// |E({v}, S)|.
std::size_t edges_to(const Graph& g, Vertex v, const VertexSet& s);

/// |E(A, B)| for disjoint A and B.
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Whether G[S] is connected. The empty set counts as connected.
bool is_connected(const Graph& g, const VertexSet& s);

/// Components of G[within] (all of G by default), each ordered by its smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the vertex of the parent graph that became vertex i.
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Graph with vertex v renamed to permutation[v].
Graph relabel(const Graph& g, std::span<const Vertex> permutation);

// Text formats ------------------------------------------------------------

/// Parses the edge-list format ("n m" then m lines "u v", '#' comments) or the
/// DIMACS format ("p edge n m", "e u v" with 1-based ids, 'c' comments).
/// Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);

/// Reads and parses a file. Throws IoError when it cannot be read.
Graph load_graph(const std::string& path);

/// Edge-list serialization accepted by parse_graph.
std::string format_graph(const Graph& g);

}  // namespace lgp
