#include "lgp/approx.hpp"

#include "lgp/branching.hpp"
#include "lgp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace lgp {

namespace {

void require_k(const Graph& g, std::size_t k) {
    if (k > g.num_vertices()) {
        throw ContractViolation("k = " + std::to_string(k) + " exceeds n = " + std::to_string(g.num_vertices()));
    }
}

}  // namespace

std::string_view to_string(ApproxMode mode) {
    switch (mode) {
        case ApproxMode::greedy_top_k: return "greedy-top-k";
        case ApproxMode::exact_branching: return "exact-branching";
        case ApproxMode::exhaustive: return "exhaustive";
        case ApproxMode::unsupported: return "unsupported";
    }
    return "unknown";
}

Solution top_degree_vertices(const Graph& g, std::size_t k, std::int64_t& degree_sum) {
    require_k(g, k);
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    VertexSet top = g.empty_set();
    degree_sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
        top.insert(order[i]);
        degree_sum += static_cast<std::int64_t>(g.degree(order[i]));
    }
    return make_solution(presets::max_cut(), g, std::move(top), "greedy-top-k");
}

bool greedy_applies(const Graph& g, std::size_t k, const Rational& epsilon) {
    if (k == 0) return true;
    const auto delta = static_cast<std::int64_t>(g.num_vertices() == 0 ? 0 : g.max_degree());
    if (delta == 0) return false;
    const auto kk = static_cast<std::int64_t>(k);
    return epsilon >= Rational(kk * kk, delta);
}

ApproxResult approx_max_cut(const Graph& g, std::size_t k, const Rational& epsilon) {
    require_k(g, k);
    if (epsilon <= 0 || epsilon >= 1) throw ContractViolation("epsilon must lie strictly between 0 and 1");
    const ProblemSpec spec = presets::max_cut();
    ApproxResult out;
    Solution top = top_degree_vertices(g, k, out.degree_sum);

    if (greedy_applies(g, k, epsilon)) {
        out.mode = ApproxMode::greedy_top_k;
        const auto kk = static_cast<std::int64_t>(k);
        out.guarantee = out.degree_sum == 0 ? Rational(1) : Rational(1) - Rational(kk * kk, out.degree_sum);
        out.solution = std::move(top);
        out.note = "cut >= B - k^2";
        return out;
    }
    out.mode = ApproxMode::exact_branching;
    out.guarantee = 1;
    out.solution = alg1(spec, g, k).solution;
    out.note = "epsilon < k^2/max_degree, solved exactly";
    return out;
}

ApproxResult approx_min_cut(const Graph& g, std::size_t k, const Rational& epsilon, const OracleOptions& options) {
    require_k(g, k);
    (void)epsilon;
    const std::size_t n = g.num_vertices();
    ApproxResult out;
    const bool exhaustive = k >= 64 || (std::uint64_t{1} << k) >= n;
    if (!exhaustive) {
        out.mode = ApproxMode::unsupported;
        out.note = "k < log2(n) needs a randomized subroutine that is not provided; use min_cut_pk or the oracle";
        return out;
    }
    out.mode = ApproxMode::exhaustive;
    out.guarantee = 1;
    out.solution = brute_force_opt(presets::min_cut(), g, k, options);
    out.solution->method = "exhaustive";
    out.note = "k >= log2(n), all k-subsets enumerated";
    return out;
}

}  // namespace lgp
