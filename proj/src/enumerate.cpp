#include "lgp/enumerate.hpp"

#include "lgp/errors.hpp"

#include <string>

namespace lgp {

namespace {

class ConnectedGrower {
public:
    ConnectedGrower(const Graph& g, Vertex root, std::size_t max_size, const ConnectedSetVisitor& visit,
                    const VertexSet& eligible)
        : g_(g),
          max_size_(max_size),
          visit_(visit),
          eligible_(eligible),
          component_(g.num_vertices()),
          decided_(g.num_vertices()),
          pending_(g.num_vertices()) {
        component_.insert(root);
        decided_.insert(root);
        pending_.insert(root);
    }

    void run() { grow(); }

private:
    void grow() {
        const auto next = pending_.first();
        if (!next) {
            visit_(component_);
            return;
        }
        const Vertex u = *next;
        pending_.erase(u);

        std::vector<Vertex> fresh;
        for (Vertex w : g_.neighbors(u)) {
            if (eligible_.contains(w) && !decided_.contains(w)) fresh.push_back(w);
        }
        for (Vertex w : fresh) decided_.insert(w);

        choose(fresh, 0);

        for (Vertex w : fresh) decided_.erase(w);
        pending_.insert(u);
    }

    // Decide each fresh neighbor in turn: out, or in while there is room.
    void choose(const std::vector<Vertex>& fresh, std::size_t index) {
        if (index == fresh.size()) {
            grow();
            return;
        }
        choose(fresh, index + 1);
        if (component_.size() < max_size_) {
            const Vertex w = fresh[index];
            component_.insert(w);
            pending_.insert(w);
            choose(fresh, index + 1);
            pending_.erase(w);
            component_.erase(w);
        }
    }

    const Graph& g_;
    std::size_t max_size_;
    const ConnectedSetVisitor& visit_;
    const VertexSet& eligible_;
    VertexSet component_;
    VertexSet decided_;
    VertexSet pending_;
};

}  // namespace

void enumerate_connected(const Graph& g, Vertex root, std::size_t max_size, const ConnectedSetVisitor& visit,
                         const VertexSet* allowed) {
    if (root >= g.num_vertices()) {
        throw ContractViolation("root " + std::to_string(root) + " out of range");
    }
    if (max_size == 0) throw ContractViolation("enumerate_connected requires max_size >= 1");

    VertexSet eligible(g.num_vertices());
    if (allowed != nullptr) {
        if (allowed->universe() != g.num_vertices()) throw ContractViolation("allowed set universe mismatch");
        if (!allowed->contains(root)) throw ContractViolation("root outside the allowed set");
        eligible = *allowed;
    } else {
        eligible = g.all_vertices();
    }
    for (Vertex v = 0; v <= root; ++v) eligible.erase(v);

    ConnectedGrower(g, root, max_size, visit, eligible).run();
}

std::vector<VertexSet> connected_sets(const Graph& g, Vertex root, std::size_t max_size) {
    std::vector<VertexSet> out;
    enumerate_connected(g, root, max_size, [&](const VertexSet& s) { out.push_back(s); });
    return out;
}

std::uint64_t count_connected(const Graph& g, Vertex root, std::size_t max_size) {
    std::uint64_t count = 0;
    enumerate_connected(g, root, max_size, [&](const VertexSet&) { ++count; });
    return count;
}

}  // namespace lgp
