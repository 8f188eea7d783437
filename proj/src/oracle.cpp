#include "lgp/oracle.hpp"

#include "lgp/errors.hpp"
#include "lgp/parallel.hpp"

#include <string>
#include <vector>

namespace lgp {

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

namespace {

// Best set among the k-subsets whose smallest element is `first`, in
// lexicographic order so that strict improvement keeps the smallest optimum.
std::optional<Solution> best_with_first(const ProblemSpec& spec, const Graph& g, std::size_t k, Vertex first) {
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> pick(k);
    pick[0] = first;
    for (std::size_t i = 1; i < k; ++i) pick[i] = static_cast<Vertex>(first + i);
    if (k > 0 && pick[k - 1] >= n) return std::nullopt;

    std::optional<Solution> best;
    VertexSet current(n);
    while (true) {
        current.clear();
        for (Vertex v : pick) current.insert(v);
        const Value val = value(spec, g, current);
        if (!best || better(spec.goal(), val, best->value)) best = Solution{current, val, "oracle"};

        // Advance positions 1..k-1 only; position 0 stays fixed at `first`.
        std::size_t i = k;
        while (i > 1 && pick[i - 1] == n - k + (i - 1)) --i;
        if (i <= 1) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return best;
}

}  // namespace

Solution brute_force_opt(const ProblemSpec& spec, const Graph& g, std::size_t k, const OracleOptions& options) {
    const std::size_t n = g.num_vertices();
    if (k > n) throw ContractViolation("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    const double subsets = binomial(n, k);
    if (subsets > options.budget) throw BudgetExceeded(n, k, subsets);
    if (k == 0) return make_solution(spec, g, g.empty_set(), "oracle");

    const std::size_t firsts = n - k + 1;
    std::vector<std::optional<Solution>> partial(firsts);
    parallel_for(firsts, options.threads,
                 [&](std::size_t f) { partial[f] = best_with_first(spec, g, k, static_cast<Vertex>(f)); });

    std::optional<Solution> best;
    for (auto& p : partial) {
        if (p && (!best || preferred(spec.goal(), *p, *best))) best = std::move(p);
    }
    return *best;
}

Decision decide(const ProblemSpec& spec, const Graph& g, std::size_t k, const Rational& p,
                const OracleOptions& options) {
    Solution opt = brute_force_opt(spec, g, k, options);
    Decision d;
    d.method = "oracle";
    d.yes = meets_threshold(spec.goal(), opt.value, p);
    if (d.yes) d.witness = std::move(opt);
    return d;
}

}  // namespace lgp
