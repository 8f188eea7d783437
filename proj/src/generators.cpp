#include "lgp/generators.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace lgp::gen {

Graph erdos_renyi(std::size_t n, double p, std::size_t max_degree, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::size_t> degree(n, 0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!coin(rng) || degree[u] >= max_degree || degree[v] >= max_degree) continue;
            edges.push_back({u, v});
            ++degree[u];
            ++degree[v];
        }
    }
    return Graph(n, edges);
}

Graph random_tree(std::size_t n, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        edges.push_back({parent(rng), v});
    }
    return Graph(n, edges);
}

Graph split_graph(std::size_t clique, std::size_t independent, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < clique; ++u) {
        for (Vertex v = u + 1; v < clique; ++v) edges.push_back({u, v});
    }
    for (Vertex i = 0; i < independent; ++i) {
        const auto v = static_cast<Vertex>(clique + i);
        for (Vertex u = 0; u < clique; ++u) {
            if (coin(rng)) edges.push_back({u, v});
        }
    }
    return Graph(clique + independent, edges);
}

Graph raise_min_degree(const Graph& g, std::size_t r, Rng& rng) {
    const std::size_t n = g.num_vertices();
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> others;
        for (Vertex u = 0; u < n; ++u) {
            if (u != v && !edges.count({std::min(u, v), std::max(u, v)})) others.push_back(u);
        }
        std::shuffle(others.begin(), others.end(), rng);
        for (Vertex u : others) {
            if (degree[v] >= r) break;
            edges.insert({std::min(u, v), std::max(u, v)});
            ++degree[u];
            ++degree[v];
        }
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph empty_graph(std::size_t n) { return Graph(n, std::vector<Edge>{}); }

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return Graph(n, edges);
}

Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
    if (n >= 3) edges.push_back({0, static_cast<Vertex>(n - 1)});
    return Graph(n, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph(n, edges);
}

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph(leaves + 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const auto shift = static_cast<Vertex>(a.num_vertices());
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
    return Graph(a.num_vertices() + b.num_vertices(), edges);
}

}  // namespace lgp::gen
