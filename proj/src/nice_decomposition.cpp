#include "lgp/errors.hpp"
#include "lgp/treewidth.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace lgp {

std::size_t NiceDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
    return largest == 0 ? 0 : largest - 1;
}

TreeDecomposition NiceDecomposition::as_tree_decomposition() const {
    TreeDecomposition d;
    d.bags.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        d.bags.push_back(nodes[i].bag);
        for (std::size_t c : nodes[i].children) d.tree_edges.emplace_back(i, c);
    }
    return d;
}

namespace {

class NiceBuilder {
public:
    std::size_t add(NiceKind kind, std::vector<Vertex> bag, Vertex v, std::vector<std::size_t> children) {
        out.nodes.push_back(NiceNode{kind, std::move(bag), v, std::move(children)});
        return out.nodes.size() - 1;
    }

    // Forget what the target lacks, then introduce what it needs.
    std::size_t adapt(std::size_t from, const std::vector<Vertex>& target) {
        std::size_t at = from;
        const std::vector<Vertex> start = out.nodes[from].bag;
        for (Vertex v : start) {
            if (std::binary_search(target.begin(), target.end(), v)) continue;
            std::vector<Vertex> bag = out.nodes[at].bag;
            bag.erase(std::find(bag.begin(), bag.end(), v));
            at = add(NiceKind::forget, std::move(bag), v, {at});
        }
        for (Vertex v : target) {
            if (std::binary_search(start.begin(), start.end(), v)) continue;
            at = introduce(at, v);
        }
        return at;
    }

    std::size_t introduce(std::size_t from, Vertex v) {
        std::vector<Vertex> bag = out.nodes[from].bag;
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        return add(NiceKind::introduce, std::move(bag), v, {from});
    }

    std::size_t grow_leaf(const std::vector<Vertex>& bag) {
        std::size_t at = add(NiceKind::leaf, {bag.front()}, bag.front(), {});
        for (std::size_t i = 1; i < bag.size(); ++i) at = introduce(at, bag[i]);
        return at;
    }

    NiceDecomposition out;
};

}  // namespace

NiceDecomposition to_nice(const Graph& g, const TreeDecomposition& d) {
    const auto report = validate_decomposition(g, d);
    if (!report.ok()) {
        throw ContractViolation("invalid tree decomposition: " + std::string(to_string(report.violation)) + ": " +
                                report.detail);
    }
    NiceBuilder b;
    if (d.num_nodes() == 0) return b.out;

    const std::size_t nodes = d.num_nodes();
    std::vector<std::vector<std::size_t>> tree(nodes);
    for (const auto& [x, y] : d.tree_edges) {
        tree[x].push_back(y);
        tree[y].push_back(x);
    }

    // Preorder from node 0; processing it backwards visits children first.
    std::vector<std::size_t> preorder;
    std::vector<std::size_t> parent(nodes, nodes);
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(nodes, false);
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        preorder.push_back(u);
        for (auto it = tree[u].rbegin(); it != tree[u].rend(); ++it) {
            if (!seen[*it]) {
                seen[*it] = true;
                parent[*it] = u;
                stack.push_back(*it);
            }
        }
    }

    std::vector<std::vector<std::size_t>> children(nodes);
    for (std::size_t u : preorder) {
        if (parent[u] != nodes) children[parent[u]].push_back(u);
    }

    std::vector<std::optional<std::size_t>> top(nodes);
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
        const std::size_t i = *it;
        const auto& bag = d.bags[i];
        std::vector<std::size_t> parts;
        for (std::size_t c : children[i]) {
            if (top[c]) parts.push_back(b.adapt(*top[c], bag));
        }
        if (parts.empty()) {
            if (!bag.empty()) top[i] = b.grow_leaf(bag);
            continue;
        }
        std::size_t acc = parts.front();
        for (std::size_t j = 1; j < parts.size(); ++j) acc = b.add(NiceKind::join, bag, 0, {acc, parts[j]});
        top[i] = acc;
    }

    if (!top[0]) return NiceDecomposition{};
    const std::size_t root = b.adapt(*top[0], {});
    if (root + 1 != b.out.nodes.size()) throw std::logic_error("nice decomposition root is not the last node");
    return std::move(b.out);
}

std::string check_nice(const NiceDecomposition& nice) {
    const std::size_t count = nice.nodes.size();
    std::vector<std::size_t> parents(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        const NiceNode& node = nice.nodes[i];
        const std::string where = "node " + std::to_string(i) + ": ";
        if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
            std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end()) {
            return where + "bag not sorted/unique";
        }
        for (std::size_t c : node.children) {
            if (c >= i) return where + "child " + std::to_string(c) + " does not precede its parent";
            ++parents[c];
        }
        auto with = [](std::vector<Vertex> bag, Vertex v) {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            return bag;
        };
        const bool has_v = std::binary_search(node.bag.begin(), node.bag.end(), node.vertex);
        switch (node.kind) {
            case NiceKind::leaf:
                if (!node.children.empty() || node.bag.size() != 1 || node.bag[0] != node.vertex) {
                    return where + "leaf must hold exactly its vertex and have no children";
                }
                break;
            case NiceKind::introduce: {
                if (node.children.size() != 1 || !has_v) return where + "malformed introduce";
                const auto& child = nice.nodes[node.children[0]].bag;
                if (std::binary_search(child.begin(), child.end(), node.vertex) ||
                    with(child, node.vertex) != node.bag) {
                    return where + "introduce bag is not child bag plus its vertex";
                }
                break;
            }
            case NiceKind::forget: {
                if (node.children.size() != 1 || has_v) return where + "malformed forget";
                if (with(node.bag, node.vertex) != nice.nodes[node.children[0]].bag) {
                    return where + "forget bag is not child bag minus its vertex";
                }
                break;
            }
            case NiceKind::join:
                if (node.children.size() != 2) return where + "join needs two children";
                for (std::size_t c : node.children) {
                    if (nice.nodes[c].bag != node.bag) return where + "join child bags differ";
                }
                break;
        }
    }
    for (std::size_t i = 0; i + 1 < count; ++i) {
        if (parents[i] != 1) return "node " + std::to_string(i) + " has " + std::to_string(parents[i]) + " parents";
    }
    if (count > 0) {
        if (parents[count - 1] != 0) return "root has a parent";
        if (!nice.nodes.back().bag.empty()) return "root bag is not empty";
    }
    return {};
}

bool introduce_is_local(const Graph& g, const NiceDecomposition& nice) {
    std::vector<VertexSet> forgotten(nice.nodes.size(), g.empty_set());
    for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
        const NiceNode& node = nice.nodes[i];
        for (std::size_t c : node.children) forgotten[i] |= forgotten[c];
        if (node.kind == NiceKind::forget) forgotten[i].insert(node.vertex);
        if (node.kind == NiceKind::introduce && g.neighbor_set(node.vertex).intersects(forgotten[i])) return false;
    }
    return true;
}

}  // namespace lgp
