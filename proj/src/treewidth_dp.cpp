#include "lgp/errors.hpp"
#include "lgp/parallel.hpp"
#include "lgp/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

namespace lgp {

namespace {

using Entry = std::optional<std::int64_t>;
using Mask = std::uint64_t;

constexpr std::size_t kMaxBag = 30;

Mask insert_bit(Mask c, std::size_t pos, Mask bit) {
    const Mask low = c & ((Mask{1} << pos) - 1);
    const Mask high = c >> pos;
    return low | (bit << pos) | (high << (pos + 1));
}

Mask remove_bit(Mask c, std::size_t pos) {
    const Mask low = c & ((Mask{1} << pos) - 1);
    const Mask high = c >> (pos + 1);
    return low | (high << pos);
}

std::size_t position_of(const std::vector<Vertex>& bag, Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

struct Table {
    std::vector<Entry> value;
    std::vector<std::uint16_t> choice;
};

class TwSolver {
public:
    TwSolver(const ProblemSpec& spec, const Graph& g, const NiceDecomposition& nice, std::size_t k, unsigned threads)
        : spec_(spec), g_(g), nice_(nice), cols_(k + 1), k_(k), threads_(threads), tables_(nice.nodes.size()) {}

    TwResult run() {
        TwResult result;
        result.stats.nice_nodes = nice_.nodes.size();
        result.stats.width = nice_.width();
        std::vector<std::size_t> pending_parents(nice_.nodes.size(), 0);
        for (const auto& node : nice_.nodes) {
            for (std::size_t c : node.children) ++pending_parents[c];
        }

        std::uint64_t live = 0;
        for (std::size_t i = 0; i < nice_.nodes.size(); ++i) {
            compute(i);
            const std::uint64_t entries = tables_[i].value.size();
            result.stats.table_entries += entries;
            live += entries;
            result.stats.peak_live_entries = std::max(result.stats.peak_live_entries, live);
            for (std::size_t c : nice_.nodes[i].children) {
                live -= tables_[c].value.size();
                std::vector<Entry>().swap(tables_[c].value);
            }
        }

        const std::size_t root = nice_.root();
        const Entry best = tables_[root].value[k_];
        if (!best) throw std::logic_error("no feasible solution at the decomposition root");

        result.solution = make_solution(spec_, g_, reconstruct(), "tw");
        if (result.solution.value.numerator() != *best) {
            throw std::logic_error("tree decomposition DP value disagrees with its witness");
        }
        return result;
    }

private:
    bool improves(std::int64_t candidate, const Entry& current) const {
        if (!current) return true;
        return spec_.goal() == Goal::min ? candidate < *current : candidate > *current;
    }

    // Bit j of adjacency[i] is set when bag[i] and bag[j] are adjacent.
    std::vector<Mask> bag_adjacency(const std::vector<Vertex>& bag) const {
        std::vector<Mask> adj(bag.size(), 0);
        for (std::size_t i = 0; i < bag.size(); ++i) {
            for (std::size_t j = 0; j < bag.size(); ++j) {
                if (i != j && g_.adjacent(bag[i], bag[j])) adj[i] |= Mask{1} << j;
            }
        }
        return adj;
    }

    template <class RowFn>
    void for_rows(std::size_t rows, RowFn&& fn) {
        const std::size_t chunks = std::min<std::size_t>(rows, std::max(1U, threads_) * 4);
        parallel_for(chunks, threads_, [&](std::size_t chunk) {
            for (std::size_t c = chunk; c < rows; c += chunks) fn(static_cast<Mask>(c));
        });
    }

    void compute(std::size_t i) {
        const NiceNode& node = nice_.nodes[i];
        if (node.bag.size() > kMaxBag) {
            throw UnsupportedProblem("bag of size " + std::to_string(node.bag.size()) + " is too large for the DP");
        }
        const std::size_t rows = std::size_t{1} << node.bag.size();
        Table& t = tables_[i];
        t.value.assign(rows * cols_, std::nullopt);
        t.choice.assign(rows * cols_, 0);
        const std::int64_t a1 = spec_.scaled_alpha1();
        const std::int64_t a2 = spec_.scaled_alpha2();
        const Mask full = rows - 1;

        switch (node.kind) {
            case NiceKind::leaf:
                t.value[0 * cols_] = 0;
                t.value[1 * cols_] = 0;
                break;

            case NiceKind::introduce: {
                const Table& child = tables_[node.children[0]];
                const std::size_t p = position_of(node.bag, node.vertex);
                const Mask nb = bag_adjacency(node.bag)[p];
                for_rows(rows, [&](Mask c) {
                    const Mask others = c & ~(Mask{1} << p);
                    const auto to_taken = static_cast<std::int64_t>(std::popcount(nb & others));
                    const auto to_rest = static_cast<std::int64_t>(std::popcount(nb & ~c & full));
                    const bool taken = (c >> p) & 1U;
                    const std::int64_t delta = taken ? a1 * to_taken + a2 * to_rest : a2 * to_taken;
                    const Mask cc = remove_bit(c, p);
                    for (std::size_t kk = 0; kk < cols_; ++kk) {
                        const Entry& from = child.value[cc * cols_ + kk];
                        if (from) t.value[c * cols_ + kk] = *from + delta;
                    }
                });
                break;
            }

            case NiceKind::forget: {
                const Table& child = tables_[node.children[0]];
                const std::size_t p = position_of(nice_.nodes[node.children[0]].bag, node.vertex);
                for_rows(rows, [&](Mask c) {
                    const Mask out = insert_bit(c, p, 0);
                    const Mask in = insert_bit(c, p, 1);
                    for (std::size_t kk = 0; kk < cols_; ++kk) {
                        Entry& dst = t.value[c * cols_ + kk];
                        if (const Entry& a = child.value[out * cols_ + kk]; a) dst = a;
                        if (kk == 0) continue;
                        if (const Entry& b = child.value[in * cols_ + kk - 1]; b && improves(*b, dst)) {
                            dst = b;
                            t.choice[c * cols_ + kk] = 1;
                        }
                    }
                });
                break;
            }

            case NiceKind::join: {
                const Table& left = tables_[node.children[0]];
                const Table& right = tables_[node.children[1]];
                const auto adj = bag_adjacency(node.bag);
                for_rows(rows, [&](Mask c) {
                    std::int64_t twice_inner = 0;
                    std::int64_t across = 0;
                    for (std::size_t j = 0; j < node.bag.size(); ++j) {
                        if (((c >> j) & 1U) == 0) continue;
                        twice_inner += std::popcount(adj[j] & c);
                        across += std::popcount(adj[j] & ~c & full);
                    }
                    const std::int64_t counted_twice = a1 * (twice_inner / 2) + a2 * across;
                    for (std::size_t kk = 0; kk < cols_; ++kk) {
                        Entry& dst = t.value[c * cols_ + kk];
                        for (std::size_t kl = 0; kl <= kk; ++kl) {
                            const Entry& l = left.value[c * cols_ + kl];
                            const Entry& r = right.value[c * cols_ + kk - kl];
                            if (!l || !r) continue;
                            const std::int64_t v = *l + *r - counted_twice;
                            if (improves(v, dst)) {
                                dst = v;
                                t.choice[c * cols_ + kk] = static_cast<std::uint16_t>(kl);
                            }
                        }
                    }
                });
                break;
            }
        }
    }

    VertexSet reconstruct() const {
        VertexSet taken = g_.empty_set();
        struct Frame {
            std::size_t node;
            Mask config;
            std::size_t count;
        };
        std::vector<Frame> stack{{nice_.root(), 0, k_}};
        while (!stack.empty()) {
            const Frame f = stack.back();
            stack.pop_back();
            const NiceNode& node = nice_.nodes[f.node];
            const std::uint16_t choice = tables_[f.node].choice[f.config * cols_ + f.count];
            switch (node.kind) {
                case NiceKind::leaf:
                    break;
                case NiceKind::introduce:
                    stack.push_back({node.children[0], remove_bit(f.config, position_of(node.bag, node.vertex)),
                                     f.count});
                    break;
                case NiceKind::forget: {
                    const std::size_t p = position_of(nice_.nodes[node.children[0]].bag, node.vertex);
                    if (choice == 1) taken.insert(node.vertex);
                    stack.push_back({node.children[0], insert_bit(f.config, p, choice), f.count - choice});
                    break;
                }
                case NiceKind::join:
                    stack.push_back({node.children[0], f.config, choice});
                    stack.push_back({node.children[1], f.config, f.count - choice});
                    break;
            }
        }
        return taken;
    }

    const ProblemSpec& spec_;
    const Graph& g_;
    const NiceDecomposition& nice_;
    std::size_t cols_;
    std::size_t k_;
    unsigned threads_;
    std::vector<Table> tables_;
};

}  // namespace

TwResult solve_tw(const ProblemSpec& spec, const Graph& g, const NiceDecomposition& nice, std::size_t k,
                  const TwOptions& options) {
    if (k > g.num_vertices()) {
        throw ContractViolation("k = " + std::to_string(k) + " exceeds n = " + std::to_string(g.num_vertices()));
    }
    if (nice.empty()) {
        if (g.num_vertices() != 0) throw ContractViolation("empty decomposition for a non-empty graph");
        return TwResult{make_solution(spec, g, g.empty_set(), "tw"), TwStats{}};
    }
    if (const auto problem = check_nice(nice); !problem.empty()) {
        throw ContractViolation("not a nice decomposition: " + problem);
    }
    if (const auto report = validate_decomposition(g, nice.as_tree_decomposition()); !report.ok()) {
        throw ContractViolation("decomposition does not fit the graph: " + std::string(to_string(report.violation)) +
                                ": " + report.detail);
    }
    return TwSolver(spec, g, nice, k, options.threads).run();
}

TwResult solve_tw(const ProblemSpec& spec, const Graph& g, std::size_t k, const TwOptions& options) {
    return solve_tw(spec, g, to_nice(g, heuristic_decomposition(g)), k, options);
}

}  // namespace lgp
