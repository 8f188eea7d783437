#include "lgp/decomposition.hpp"

#include "lgp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace lgp {

std::size_t TreeDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& bag : bags) largest = std::max(largest, bag.size());
    return largest == 0 ? 0 : largest - 1;
}

std::string_view to_string(DecompositionViolation v) {
    switch (v) {
        case DecompositionViolation::none: return "ok";
        case DecompositionViolation::not_a_tree: return "not a tree";
        case DecompositionViolation::vertex_not_covered: return "(i) vertex not covered";
        case DecompositionViolation::edge_not_covered: return "(ii) edge not covered";
        case DecompositionViolation::not_connected: return "(iii) occurrences not connected";
    }
    return "unknown";
}

namespace {

DecompositionReport fail(DecompositionViolation v, std::string detail) { return {v, std::move(detail)}; }

}  // namespace

DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& d) {
    const std::size_t nodes = d.num_nodes();
    const std::size_t n = g.num_vertices();

    for (std::size_t i = 0; i < nodes; ++i) {
        const auto& bag = d.bags[i];
        for (std::size_t j = 0; j < bag.size(); ++j) {
            if (bag[j] >= n) {
                return fail(DecompositionViolation::not_a_tree,
                            "bag " + std::to_string(i) + " holds vertex " + std::to_string(bag[j]) + " >= n");
            }
            if (j > 0 && bag[j - 1] >= bag[j]) {
                return fail(DecompositionViolation::not_a_tree, "bag " + std::to_string(i) + " not sorted/unique");
            }
        }
    }

    // Tree shape: nodes-1 edges, all endpoints valid, connected.
    std::vector<std::vector<std::size_t>> tree(nodes);
    for (const auto& [a, b] : d.tree_edges) {
        if (a >= nodes || b >= nodes || a == b) {
            return fail(DecompositionViolation::not_a_tree,
                        "bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
        }
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    if (nodes > 0 && d.tree_edges.size() != nodes - 1) {
        return fail(DecompositionViolation::not_a_tree, std::to_string(nodes) + " nodes but " +
                                                            std::to_string(d.tree_edges.size()) + " tree edges");
    }
    if (nodes > 0) {
        std::vector<bool> seen(nodes, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : tree[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != nodes) return fail(DecompositionViolation::not_a_tree, "tree is disconnected");
    }

    std::vector<std::vector<std::size_t>> holders(n);
    for (std::size_t i = 0; i < nodes; ++i) {
        for (Vertex v : d.bags[i]) holders[v].push_back(i);
    }

    for (Vertex v = 0; v < n; ++v) {
        if (holders[v].empty()) {
            return fail(DecompositionViolation::vertex_not_covered, "vertex " + std::to_string(v) + " is in no bag");
        }
    }

    for (const Edge& e : g.edges()) {
        const auto& a = holders[e.u];
        const auto& b = holders[e.v];
        std::vector<std::size_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) {
            return fail(DecompositionViolation::edge_not_covered,
                        "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag");
        }
    }

    // Occurrences of v form a subtree iff they are connected inside the tree.
    std::vector<char> holds(nodes, 0);
    std::vector<char> seen(nodes, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t i : holders[v]) holds[i] = 1;
        std::vector<std::size_t> stack{holders[v].front()};
        seen[holders[v].front()] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : tree[u]) {
                if (holds[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        for (std::size_t i : holders[v]) {
            holds[i] = 0;
            seen[i] = 0;
        }
        if (reached != holders[v].size()) {
            return fail(DecompositionViolation::not_connected,
                        "nodes holding vertex " + std::to_string(v) + " are not connected");
        }
    }
    return {};
}

TreeDecomposition elimination_decomposition(const Graph& g, std::span<const Vertex> order) {
    const std::size_t n = g.num_vertices();
    if (order.size() != n) throw ContractViolation("elimination order must list every vertex once");
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || position[order[i]] != n) throw ContractViolation("elimination order is not a permutation");
        position[order[i]] = i;
    }

    std::vector<std::set<Vertex>> fill(n);
    for (const Edge& e : g.edges()) {
        fill[e.u].insert(e.v);
        fill[e.v].insert(e.u);
    }

    TreeDecomposition d;
    d.bags.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        std::vector<Vertex> later(fill[v].begin(), fill[v].end());
        auto& bag = d.bags[i];
        bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());

        for (Vertex a : later) {
            fill[a].erase(v);
            for (Vertex b : later) {
                if (a != b) fill[a].insert(b);
            }
        }
        if (i + 1 < n) {
            std::size_t parent = i + 1;
            if (!later.empty()) {
                parent = n;
                for (Vertex u : later) parent = std::min(parent, position[u]);
            }
            d.tree_edges.emplace_back(i, parent);
        }
    }
    return d;
}

std::vector<Vertex> min_degree_ordering(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::set<Vertex>> fill(n);
    for (const Edge& e : g.edges()) {
        fill[e.u].insert(e.v);
        fill[e.v].insert(e.u);
    }
    std::vector<bool> gone(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        std::size_t pick_degree = n + 1;
        for (Vertex v = 0; v < n; ++v) {
            if (!gone[v] && fill[v].size() < pick_degree) {
                pick = v;
                pick_degree = fill[v].size();
            }
        }
        gone[pick] = true;
        order.push_back(pick);
        const std::vector<Vertex> nb(fill[pick].begin(), fill[pick].end());
        for (Vertex a : nb) {
            fill[a].erase(pick);
            for (Vertex b : nb) {
                if (a != b) fill[a].insert(b);
            }
        }
        fill[pick].clear();
    }
    return order;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
    const auto order = min_degree_ordering(g);
    return elimination_decomposition(g, order);
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::size_t number(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

}  // namespace

TreeDecomposition parse_decomposition(std::string_view text) {
    TreeDecomposition d;
    bool have_header = false;
    std::vector<bool> bag_seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const auto tok = tokens_of(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (tok.empty() || tok[0] == "c" || tok[0].front() == '#') continue;

        if (tok[0] == "s") {
            if (have_header) throw ParseError(line_no, "duplicate 's td' header");
            if (tok.size() != 5 || tok[1] != "td") throw ParseError(line_no, "expected 's td <nodes> <width+1> <n>'");
            const std::size_t nodes = number(tok[2], line_no);
            d.bags.assign(nodes, {});
            bag_seen.assign(nodes, false);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "missing 's td' header");

        if (tok[0] == "b") {
            if (tok.size() < 2) throw ParseError(line_no, "expected 'b <node> <vertices...>'");
            const std::size_t id = number(tok[1], line_no);
            if (id == 0 || id > d.bags.size()) throw ParseError(line_no, "bag id " + std::to_string(id) + " out of range");
            if (bag_seen[id - 1]) throw ParseError(line_no, "bag " + std::to_string(id) + " given twice");
            bag_seen[id - 1] = true;
            auto& bag = d.bags[id - 1];
            for (std::size_t i = 2; i < tok.size(); ++i) bag.push_back(static_cast<Vertex>(number(tok[i], line_no)));
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
                throw ParseError(line_no, "bag " + std::to_string(id) + " repeats a vertex");
            }
            continue;
        }
        if (tok.size() != 2) throw ParseError(line_no, "expected a tree edge '<node> <node>'");
        const std::size_t a = number(tok[0], line_no);
        const std::size_t b = number(tok[1], line_no);
        if (a == 0 || b == 0 || a > d.bags.size() || b > d.bags.size()) {
            throw ParseError(line_no, "tree edge references an unknown node");
        }
        d.tree_edges.emplace_back(a - 1, b - 1);
    }
    if (!have_header) throw ParseError(line_no, "missing 's td' header");
    for (std::size_t i = 0; i < bag_seen.size(); ++i) {
        if (!bag_seen[i]) throw ParseError(line_no, "bag " + std::to_string(i + 1) + " never given");
    }
    return d;
}

TreeDecomposition load_decomposition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read decomposition file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_decomposition(buffer.str());
}

std::string format_decomposition(const TreeDecomposition& d, std::size_t n) {
    std::ostringstream out;
    out << "s td " << d.num_nodes() << ' ' << (d.num_nodes() == 0 ? 0 : d.width() + 1) << ' ' << n << '\n';
    for (std::size_t i = 0; i < d.num_nodes(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : d.bags[i]) out << ' ' << v;
        out << '\n';
    }
    for (const auto& [a, b] : d.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

}  // namespace lgp
