#include "lgp/cut.hpp"

#include "lgp/branching.hpp"
#include "lgp/errors.hpp"
#include "lgp/parallel.hpp"

#include <algorithm>
#include <string>

namespace lgp {

namespace {

void require_k(const Graph& g, std::size_t k) {
    if (k > g.num_vertices()) {
        throw ContractViolation("k = " + std::to_string(k) + " exceeds n = " + std::to_string(g.num_vertices()));
    }
}

Decision verified_yes(const ProblemSpec& spec, const Graph& g, VertexSet s, const Rational& p, std::string method) {
    Solution sol = make_solution(spec, g, std::move(s), method);
    if (!meets_threshold(spec.goal(), sol.value, p)) {
        throw std::logic_error("witness from " + method + " does not meet the threshold");
    }
    return Decision{true, std::move(sol), std::move(method)};
}

// Calls visit(B) for every B ⊆ V with |B| <= max_size whose smallest member is
// `first` (or B = ∅ when first == n).
template <class Visit>
void subsets_from(const Graph& g, Vertex first, std::size_t max_size, Visit&& visit) {
    VertexSet b = g.empty_set();
    if (first == g.num_vertices()) {
        visit(b);
        return;
    }
    if (max_size == 0) return;
    const auto n = static_cast<Vertex>(g.num_vertices());
    auto grow = [&](auto&& self, Vertex next) -> void {
        visit(b);
        if (b.size() == max_size) return;
        for (Vertex v = next; v < n; ++v) {
            b.insert(v);
            self(self, v + 1);
            b.erase(v);
        }
    };
    b.insert(first);
    grow(grow, first + 1);
}

}  // namespace

SwapResult swap_construct(const Graph& g, std::size_t k) {
    require_k(g, k);
    const std::size_t n = g.num_vertices();
    const std::size_t r = n == 0 ? 0 : g.min_degree();
    VertexSet in = g.empty_set();
    for (Vertex v = 0; v < k; ++v) in.insert(v);

    SwapResult out;
    out.guarantee = static_cast<std::int64_t>(std::min(n - k, r * k));
    out.cut_trace.push_back(static_cast<std::int64_t>(edges_crossing(g, in)));
    for (;;) {
        const VertexSet out_side = in.complement();
        std::optional<Vertex> lonely;
        out_side.for_each([&](Vertex v) {
            if (!lonely && !g.neighbor_set(v).intersects(in)) lonely = v;
        });
        std::optional<Vertex> weak;
        in.for_each([&](Vertex v) {
            if (!weak && edges_to(g, v, out_side) < r) weak = v;
        });
        if (!lonely || !weak) break;
        in.erase(*weak);
        in.insert(*lonely);
        ++out.swaps;
        const auto cut = static_cast<std::int64_t>(edges_crossing(g, in));
        if (cut <= out.cut_trace.back()) throw std::logic_error("swap did not increase the cut");
        out.cut_trace.push_back(cut);
    }
    out.solution = make_solution(presets::max_cut(), g, std::move(in), "swap");
    return out;
}

Decision max_cut_standard(const Graph& g, std::size_t k, const Rational& p) {
    require_k(g, k);
    const ProblemSpec spec = presets::max_cut();
    const std::size_t n = g.num_vertices();

    SwapResult swapped = swap_construct(g, k);
    if (meets_threshold(spec.goal(), swapped.solution.value, p)) {
        return verified_yes(spec, g, std::move(swapped.solution.vertices), p, "swap");
    }

    if (k >= 1 && n > 0 && g.max_degree() <= n - k) {
        Vertex hub = 0;
        for (Vertex v = 1; v < n; ++v) {
            if (g.degree(v) > g.degree(hub)) hub = v;
        }
        VertexSet s = g.empty_set();
        s.insert(hub);
        for (Vertex v = 0; v < n && s.size() < k; ++v) {
            if (v != hub && !g.adjacent(v, hub)) s.insert(v);
        }
        for (Vertex v = 0; v < n && s.size() < k; ++v) s.insert(v);
        if (meets_threshold(spec.goal(), value(spec, g, s), p)) {
            return verified_yes(spec, g, std::move(s), p, "max-degree");
        }
    }

    BranchResult exact = alg1(spec, g, k);
    if (meets_threshold(spec.goal(), exact.solution.value, p)) {
        return verified_yes(spec, g, std::move(exact.solution.vertices), p, "alg1");
    }
    return Decision{false, std::nullopt, "alg1"};
}

Decision min_cut_pk(const Graph& g, std::size_t k, const Rational& p) {
    require_k(g, k);
    const ProblemSpec spec = presets::min_cut();
    if (p < 0) return Decision{false, std::nullopt, "pk"};

    // A cut and its complement have the same value, so search the smaller side.
    const std::size_t n = g.num_vertices();
    const bool flip = 2 * k > n;
    const std::size_t side = flip ? n - k : k;

    VertexSet allowed = g.empty_set();
    const Rational bound = p + static_cast<std::int64_t>(side);
    for (Vertex v = 0; v < n; ++v) {
        if (Rational(static_cast<std::int64_t>(g.degree(v))) < bound) allowed.insert(v);
    }
    if (allowed.size() < side) return Decision{false, std::nullopt, "pk"};

    Alg2Options options;
    options.allowed = allowed;
    Alg2Result found = alg2_search(spec, g, side, options);
    if (found.solution && meets_threshold(spec.goal(), found.solution->value, p)) {
        VertexSet s = flip ? found.solution->vertices.complement() : found.solution->vertices;
        return verified_yes(spec, g, std::move(s), p, "pk");
    }
    return Decision{false, std::nullopt, "pk"};
}

Decision min_cut_np(const Graph& g, std::size_t k, const Rational& p, unsigned threads) {
    require_k(g, k);
    if (p > Rational(static_cast<std::int64_t>(k))) {
        throw UnsupportedProblem("the n^p algorithm needs p <= k; use min_cut_pk instead");
    }
    const ProblemSpec spec = presets::min_cut();
    if (p < 0) return Decision{false, std::nullopt, "np"};
    const auto boundary_limit = static_cast<std::size_t>(boost::rational_cast<std::int64_t>(p));
    const std::size_t max_boundary = std::min(boundary_limit, k);
    const std::size_t n = g.num_vertices();

    std::vector<std::optional<Solution>> best(n + 1);
    parallel_for(n + 1, threads, [&](std::size_t first) {
        subsets_from(g, static_cast<Vertex>(first), max_boundary, [&](const VertexSet& b) {
            const VertexSet rest = b.complement();
            const auto components = connected_components(g, rest);
            std::vector<KnapsackItem> items;
            items.reserve(components.size());
            for (const auto& c : components) {
                items.push_back({c.size(), static_cast<std::int64_t>(edges_between(g, c, b))});
            }
            const auto pick = component_knapsack(items, k - b.size());
            if (!pick) return;
            VertexSet s = b;
            for (std::size_t i : *pick) s |= components[i];
            Solution sol = make_solution(spec, g, std::move(s), "np");
            if (!meets_threshold(spec.goal(), sol.value, p)) return;
            auto& slot = best[first];
            if (!slot || preferred(spec.goal(), sol, *slot)) slot = std::move(sol);
        });
    });

    std::optional<Solution> winner;
    for (auto& s : best) {
        if (s && (!winner || preferred(spec.goal(), *s, *winner))) winner = std::move(s);
    }
    if (!winner) return Decision{false, std::nullopt, "np"};
    return verified_yes(spec, g, std::move(winner->vertices), p, "np");
}

std::optional<std::vector<std::size_t>> component_knapsack(const std::vector<KnapsackItem>& items,
                                                           std::size_t target) {
    const std::size_t count = items.size();
    // best[i][s]: largest alpha using items [0, i) with total size s.
    std::vector<std::vector<std::optional<std::int64_t>>> best(
        count + 1, std::vector<std::optional<std::int64_t>>(target + 1));
    best[0][0] = 0;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t s = 0; s <= target; ++s) {
            best[i + 1][s] = best[i][s];
            const std::size_t size = items[i].size;
            if (size == 0) throw ContractViolation("knapsack item of size 0");
            if (size <= s && best[i][s - size]) {
                const std::int64_t with = *best[i][s - size] + items[i].alpha;
                if (!best[i + 1][s] || with > *best[i + 1][s]) best[i + 1][s] = with;
            }
        }
    }
    if (!best[count][target]) return std::nullopt;

    std::vector<std::size_t> chosen;
    std::size_t s = target;
    for (std::size_t i = count; i > 0; --i) {
        if (best[i][s] == best[i - 1][s]) continue;
        chosen.push_back(i - 1);
        s -= items[i - 1].size;
    }
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace lgp
