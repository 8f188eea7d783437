#include "lgp/graph.hpp"

#include "lgp/errors.hpp"

#include <algorithm>
#include <string>

namespace lgp {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    adjacency_bits_.assign(n, VertexSet(n));
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw ContractViolation("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") has an endpoint >= n = " + std::to_string(n));
        }
        if (e.u == e.v) throw ContractViolation("self-loop at vertex " + std::to_string(e.u));
        if (adjacency_bits_[e.u].contains(e.v)) {
            throw ContractViolation("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        adjacency_bits_[e.u].insert(e.v);
        adjacency_bits_[e.v].insert(e.u);
        edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t v = 0; v < n; ++v) adjacency_[v] = adjacency_bits_[v].members();

    if (n > 0) {
        min_degree_ = adjacency_[0].size();
        for (const auto& nb : adjacency_) {
            max_degree_ = std::max(max_degree_, nb.size());
            min_degree_ = std::min(min_degree_, nb.size());
        }
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v >= num_vertices()) {
        throw ContractViolation("vertex " + std::to_string(v) + " out of range for n = " +
                                std::to_string(num_vertices()));
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

const VertexSet& Graph::neighbor_set(Vertex v) const {
    check_vertex(v);
    return adjacency_bits_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    return adjacency_bits_[u].contains(v);
}

VertexSet Graph::neighborhood(Vertex v, bool closed) const {
    VertexSet s = neighbor_set(v);
    if (closed) s.insert(v);
    return s;
}

namespace {
void require_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.num_vertices()) {
        throw ContractViolation("vertex set universe " + std::to_string(s.universe()) +
                                " does not match graph order " + std::to_string(g.num_vertices()));
    }
}
}  // namespace

std::size_t edges_within(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += g.neighbor_set(v).intersection_size(s); });
    return twice / 2;
}

std::size_t edges_crossing(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    std::size_t c = 0;
    s.for_each([&](Vertex v) { c += g.degree(v) - g.neighbor_set(v).intersection_size(s); });
    return c;
}

std::size_t edges_to(const Graph& g, Vertex v, const VertexSet& s) {
    require_universe(g, s);
    return g.neighbor_set(v).intersection_size(s);
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    require_universe(g, a);
    require_universe(g, b);
    if (a.intersects(b)) throw ContractViolation("edges_between requires disjoint sets");
    std::size_t c = 0;
    a.for_each([&](Vertex v) { c += g.neighbor_set(v).intersection_size(b); });
    return c;
}

bool is_connected(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    const auto start = s.first();
    if (!start) return true;
    VertexSet seen(g.num_vertices());
    std::vector<Vertex> stack{*start};
    seen.insert(*start);
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (s.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen.size() == s.size();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(g, g.all_vertices());
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
    require_universe(g, within);
    std::vector<VertexSet> parts;
    VertexSet unseen = within;
    std::vector<Vertex> stack;
    while (auto start = unseen.first()) {
        VertexSet part(g.num_vertices());
        stack.assign(1, *start);
        unseen.erase(*start);
        part.insert(*start);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (unseen.contains(w)) {
                    unseen.erase(w);
                    part.insert(w);
                    stack.push_back(w);
                }
            }
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    InducedSubgraph out;
    out.original = s.members();
    std::vector<Vertex> index(g.num_vertices(), 0);
    for (std::size_t i = 0; i < out.original.size(); ++i) index[out.original[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (s.contains(e.u) && s.contains(e.v)) edges.push_back({index[e.u], index[e.v]});
    }
    out.graph = Graph(out.original.size(), edges);
    return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> permutation) {
    if (permutation.size() != g.num_vertices()) throw ContractViolation("permutation size mismatch");
    VertexSet image(g.num_vertices());
    for (Vertex v : permutation) image.insert(v);
    if (image.size() != g.num_vertices()) throw ContractViolation("not a permutation");
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (const Edge& e : g.edges()) edges.push_back({permutation[e.u], permutation[e.v]});
    return Graph(g.num_vertices(), edges);
}

}  // namespace lgp
