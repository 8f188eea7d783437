#include "lgp/branching.hpp"

#include "lgp/enumerate.hpp"
#include "lgp/errors.hpp"
#include "lgp/parallel.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lgp {

std::uint64_t tree_size_bound(std::uint64_t arity, std::size_t depth) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t d = 0; d <= depth; ++d) {
        if (total > cap - layer) return cap;
        total += layer;
        if (d < depth) {
            if (arity != 0 && layer > cap / arity) return cap;
            layer *= arity;
        }
    }
    return total;
}

namespace {

void require_k(const Graph& g, std::size_t k) {
    if (k > g.num_vertices()) {
        throw ContractViolation("k = " + std::to_string(k) + " exceeds n = " + std::to_string(g.num_vertices()));
    }
}

void merge(BranchStats& into, const BranchStats& part) {
    into.nodes_visited += part.nodes_visited;
    into.leaves += part.leaves;
    into.max_depth = std::max(into.max_depth, part.max_depth);
}

void keep_best(Goal goal, std::optional<Solution>& best, std::optional<Solution> candidate) {
    if (candidate && (!best || preferred(goal, *candidate, *best))) best = std::move(candidate);
}

// Shared driver: the root node is expanded here and each child subtree becomes
// an independent task, so serial and parallel runs do identical work.
template <class Search>
std::pair<std::optional<Solution>, BranchStats> run_tasks(const Graph& g, std::size_t k, Goal goal, unsigned threads,
                                                          Search make_search) {
    auto root = make_search();
    VertexSet taken = g.empty_set();
    BranchStats stats;
    stats.nodes_visited = 1;
    if (k == 0) {
        stats.leaves = 1;
        return {root.leaf(taken), stats};
    }
    const auto children = root.children(taken, k);
    std::vector<std::optional<Solution>> results(children.size());
    std::vector<BranchStats> part(children.size());
    parallel_for(children.size(), threads, [&](std::size_t i) {
        auto search = make_search();
        VertexSet t = g.empty_set();
        t.insert(children[i]);
        search.visit(t, k - 1, 1);
        results[i] = std::move(search.best);
        part[i] = search.stats;
    });
    std::optional<Solution> best;
    for (std::size_t i = 0; i < children.size(); ++i) {
        merge(stats, part[i]);
        keep_best(goal, best, std::move(results[i]));
    }
    return {best, stats};
}

class Alg1Search {
public:
    Alg1Search(const ProblemSpec& spec, const Graph& g, GreedyKey key) : spec_(spec), g_(g), key_(key) {}

    std::optional<Solution> leaf(const VertexSet& taken) const { return make_solution(spec_, g_, taken, "alg1"); }

    std::vector<Vertex> children(const VertexSet& taken, std::size_t remaining) const {
        if (g_.num_vertices() - taken.size() < remaining) return {};
        const Vertex v = greedy_vertex(taken);
        std::vector<Vertex> out;
        if (!taken.contains(v)) out.push_back(v);
        for (Vertex w : g_.neighbors(v)) {
            if (!taken.contains(w)) out.push_back(w);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void visit(VertexSet& taken, std::size_t remaining, std::size_t depth) {
        ++stats.nodes_visited;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (remaining == 0) {
            ++stats.leaves;
            keep_best(spec_.goal(), best, leaf(taken));
            return;
        }
        for (Vertex w : children(taken, remaining)) {
            taken.insert(w);
            visit(taken, remaining - 1, depth + 1);
            taken.erase(w);
        }
    }

    std::optional<Solution> best;
    BranchStats stats;

private:
    std::int64_t key(Vertex v, const VertexSet& taken) const {
        const auto inside = static_cast<std::int64_t>(edges_to(g_, v, taken));
        const auto degree = static_cast<std::int64_t>(g_.degree(v));
        const std::int64_t a1 = spec_.scaled_alpha1();
        const std::int64_t a2 = spec_.scaled_alpha2();
        if (key_ == GreedyKey::contribution) return a1 / 2 * inside + a2 * (degree - inside);
        // val(T ∪ {v}) - val(T)
        return (a1 - 2 * a2) * inside + a2 * degree;
    }

    Vertex greedy_vertex(const VertexSet& taken) const {
        std::optional<Vertex> chosen;
        std::int64_t chosen_key = 0;
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (taken.contains(v)) continue;
            const std::int64_t kv = key(v, taken);
            const bool improves = spec_.goal() == Goal::min ? kv < chosen_key : kv > chosen_key;
            if (!chosen || improves) {
                chosen = v;
                chosen_key = kv;
            }
        }
        return *chosen;
    }

    const ProblemSpec& spec_;
    const Graph& g_;
    GreedyKey key_;
};

class Alg2Search {
public:
    Alg2Search(const ProblemSpec& spec, const Graph& g, const Alg2Options& options, const VertexSet& allowed)
        : spec_(spec), g_(g), branching_(options.branching), allowed_(allowed) {}

    std::optional<Solution> leaf(const VertexSet& taken) const { return make_solution(spec_, g_, taken, "alg2"); }

    std::vector<Vertex> children(const VertexSet& taken, std::size_t remaining) const {
        const VertexSet free = allowed_ - taken;
        if (free.size() < remaining) return {};
        VertexSet branch(g_.num_vertices());
        for (const auto& s : best_connected_extensions(spec_, g_, taken, remaining, &allowed_)) {
            if (!s) continue;
            if (branching_ == Alg2Branching::members) {
                branch |= *s;
            } else {
                s->for_each([&](Vertex v) { branch |= g_.neighborhood(v, true); });
            }
        }
        branch &= free;
        return branch.members();
    }

    void visit(VertexSet& taken, std::size_t remaining, std::size_t depth) {
        ++stats.nodes_visited;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (remaining == 0) {
            ++stats.leaves;
            keep_best(spec_.goal(), best, leaf(taken));
            return;
        }
        for (Vertex w : children(taken, remaining)) {
            taken.insert(w);
            visit(taken, remaining - 1, depth + 1);
            taken.erase(w);
        }
    }

    std::optional<Solution> best;
    BranchStats stats;

private:
    const ProblemSpec& spec_;
    const Graph& g_;
    Alg2Branching branching_;
    const VertexSet& allowed_;
};

}  // namespace

BranchResult alg1(const ProblemSpec& spec, const Graph& g, std::size_t k, const Alg1Options& options) {
    if (!is_degrading(spec)) {
        throw UnsupportedProblem("alg1 requires a degrading objective; " + spec.to_string() + " is not (use alg2)");
    }
    require_k(g, k);
    auto [best, stats] = run_tasks(g, k, spec.goal(), options.threads,
                                   [&] { return Alg1Search(spec, g, options.key); });
    return BranchResult{std::move(*best), stats};
}

Alg2Result alg2_search(const ProblemSpec& spec, const Graph& g, std::size_t k, const Alg2Options& options) {
    require_k(g, k);
    const VertexSet allowed = options.allowed ? *options.allowed : g.all_vertices();
    if (allowed.universe() != g.num_vertices()) throw ContractViolation("allowed set universe mismatch");
    if (k == 0) {
        return Alg2Result{make_solution(spec, g, g.empty_set(), "alg2"), BranchStats{1, 0, 1}};
    }
    auto [best, stats] = run_tasks(g, k, spec.goal(), options.threads,
                                   [&] { return Alg2Search(spec, g, options, allowed); });
    return Alg2Result{std::move(best), stats};
}

BranchResult alg2(const ProblemSpec& spec, const Graph& g, std::size_t k, const Alg2Options& options) {
    Alg2Options unrestricted = options;
    unrestricted.allowed.reset();
    auto result = alg2_search(spec, g, k, unrestricted);
    return BranchResult{std::move(*result.solution), result.stats};
}

std::vector<std::optional<VertexSet>> best_connected_extensions(const ProblemSpec& spec, const Graph& g,
                                                                const VertexSet& taken, std::size_t max_size,
                                                                const VertexSet* allowed) {
    std::vector<std::optional<VertexSet>> best(max_size);
    std::vector<Value> best_value(max_size);
    if (max_size == 0) return best;
    VertexSet free = allowed ? *allowed : g.all_vertices();
    free -= taken;

    free.for_each([&](Vertex root) {
        enumerate_connected(
            g, root, max_size,
            [&](const VertexSet& s) {
                const std::size_t slot = s.size() - 1;
                const Value v = value(spec, g, taken | s);
                if (!best[slot] || better(spec.goal(), v, best_value[slot]) ||
                    (v == best_value[slot] && lex_less(s, *best[slot]))) {
                    best[slot] = s;
                    best_value[slot] = v;
                }
            },
            &free);
    });
    return best;
}

std::optional<VertexSet> best_connected_extension(const ProblemSpec& spec, const Graph& g, const VertexSet& taken,
                                                  std::size_t size, const VertexSet* allowed) {
    if (size == 0) throw ContractViolation("connected extension size must be >= 1");
    return best_connected_extensions(spec, g, taken, size, allowed)[size - 1];
}

}  // namespace lgp
