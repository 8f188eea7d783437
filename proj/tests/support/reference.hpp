#pragma once

// Reference implementations used only by tests. They work from the raw edge
// list with bitmasks and exact rationals and share no code with the solvers.

#include "lgp/generators.hpp"
#include "lgp/problem.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace ref {

using lgp::Graph;
using lgp::Rational;
using Mask = std::uint32_t;

inline Mask to_mask(const lgp::VertexSet& s) {
    Mask m = 0;
    for (auto v : s.members()) m |= Mask{1} << v;
    return m;
}

inline lgp::VertexSet from_mask(std::size_t n, Mask m) {
    lgp::VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v) {
        if ((m >> v) & 1U) s.insert(static_cast<lgp::Vertex>(v));
    }
    return s;
}

struct Counts {
    std::int64_t inside = 0;
    std::int64_t crossing = 0;
};

inline Counts count_edges(const Graph& g, Mask s) {
    Counts c;
    for (const auto& e : g.edges()) {
        const bool a = (s >> e.u) & 1U;
        const bool b = (s >> e.v) & 1U;
        if (a && b) ++c.inside;
        else if (a != b) ++c.crossing;
    }
    return c;
}

inline Rational objective(Rational a1, Rational a2, const Graph& g, Mask s) {
    const Counts c = count_edges(g, s);
    return a1 * c.inside + a2 * c.crossing;
}

inline Rational objective(const lgp::ProblemSpec& spec, const Graph& g, Mask s) {
    return objective(spec.alpha1(), spec.alpha2(), g, s);
}

/// Best value over all k-subsets, by bitmask sweep.
inline Rational optimum(const lgp::ProblemSpec& spec, const Graph& g, std::size_t k) {
    const std::size_t n = g.num_vertices();
    std::optional<Rational> best;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
        const Rational v = objective(spec, g, s);
        if (!best || (spec.goal() == lgp::Goal::max ? v > *best : v < *best)) best = v;
    }
    return *best;
}

inline bool decide(const lgp::ProblemSpec& spec, const Graph& g, std::size_t k, Rational p) {
    const Rational best = optimum(spec, g, k);
    return spec.goal() == lgp::Goal::max ? best >= p : best <= p;
}

/// Connectivity of G[s] by repeated neighbor expansion over the edge list.
inline bool connected(const Graph& g, Mask s) {
    if (s == 0) return false;
    Mask reached = s & (~s + 1);
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& e : g.edges()) {
            const Mask both = (Mask{1} << e.u) | (Mask{1} << e.v);
            if ((both & s) != both) continue;
            if ((reached & both) && (reached & both) != both) {
                reached |= both;
                grew = true;
            }
        }
    }
    return reached == s;
}

/// Every connected vertex set of size 1..max_size.
inline std::vector<Mask> connected_sets(const Graph& g, std::size_t max_size) {
    std::vector<Mask> out;
    for (Mask s = 1; s < (Mask{1} << g.num_vertices()); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) <= max_size && connected(g, s)) out.push_back(s);
    }
    return out;
}

inline std::size_t vertex_cover_number(const Graph& g) {
    std::size_t best = g.num_vertices();
    for (Mask s = 0; s < (Mask{1} << g.num_vertices()); ++s) {
        bool ok = true;
        for (const auto& e : g.edges()) ok = ok && (((s >> e.u) | (s >> e.v)) & 1U);
        if (ok) best = std::min<std::size_t>(best, std::popcount(s));
    }
    return best;
}

/// Largest alpha over item subsets whose sizes sum to target.
inline std::optional<std::int64_t> knapsack(const std::vector<std::pair<std::size_t, std::int64_t>>& items,
                                            std::size_t target) {
    std::optional<std::int64_t> best;
    for (Mask s = 0; s < (Mask{1} << items.size()); ++s) {
        std::size_t size = 0;
        std::int64_t alpha = 0;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if ((s >> i) & 1U) {
                size += items[i].first;
                alpha += items[i].second;
            }
        }
        if (size == target && (!best || alpha > *best)) best = alpha;
    }
    return best;
}

inline std::vector<lgp::ProblemSpec> presets() {
    using namespace lgp::presets;
    return {densest(), sparsest(), max_cut(), min_cut(), coverage()};
}

/// A random rational in [-2, 2] with denominator up to 4.
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(1, 4);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-2 * q, 2 * q);
    return Rational(num(rng), q);
}

/// Random graph with n in [lo, hi] and maximum degree at most max_degree.
inline Graph random_graph(std::mt19937_64& rng, std::size_t lo, std::size_t hi, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> size(lo, hi);
    std::uniform_real_distribution<double> density(0.15, 0.7);
    const std::size_t n = size(rng);
    return lgp::gen::erdos_renyi(n, density(rng), max_degree, rng);
}

}  // namespace ref
