#include "lgp/vertex_cover.hpp"

#include "lgp/errors.hpp"
#include "lgp/parallel.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace lgp {

namespace {

bool cover_within(const Graph& g, VertexSet& chosen, std::size_t budget) {
    for (const Edge& e : g.edges()) {
        if (chosen.contains(e.u) || chosen.contains(e.v)) continue;
        if (budget == 0) return false;
        for (Vertex pick : {e.u, e.v}) {
            chosen.insert(pick);
            if (cover_within(g, chosen, budget - 1)) return true;
            chosen.erase(pick);
        }
        return false;
    }
    return true;
}

bool covers(const Graph& g, const VertexSet& c) {
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return c.contains(e.u) || c.contains(e.v); });
}

struct Candidate {
    std::int64_t score;
    Vertex vertex;
};

class VcSearch {
public:
    VcSearch(const ProblemSpec& spec, const Graph& g, std::size_t k, const VertexSet& cover)
        : spec_(spec), g_(g), k_(k), cover_(cover), cover_list_(cover.members()),
          rest_((cover.complement()).members()) {}

    // Best completion over all X whose smallest member has index `first` in
    // cover_list_, or X = ∅ when first == cover_list_.size().
    std::optional<Solution> run_from(std::size_t first, std::uint64_t& count) const {
        std::optional<Solution> best;
        VertexSet x = g_.empty_set();
        if (first == cover_list_.size()) {
            consider(x, best, count);
            return best;
        }
        x.insert(cover_list_[first]);
        extend(x, first + 1, best, count);
        return best;
    }

    std::size_t task_count() const { return cover_list_.size() + 1; }

private:
    void extend(VertexSet& x, std::size_t next, std::optional<Solution>& best, std::uint64_t& count) const {
        consider(x, best, count);
        if (x.size() == std::min(k_, cover_list_.size())) return;
        for (std::size_t i = next; i < cover_list_.size(); ++i) {
            x.insert(cover_list_[i]);
            extend(x, i + 1, best, count);
            x.erase(cover_list_[i]);
        }
    }

    void consider(const VertexSet& x, std::optional<Solution>& best, std::uint64_t& count) const {
        if (x.size() > k_ || k_ - x.size() > rest_.size()) return;
        ++count;
        const std::size_t need = k_ - x.size();
        const VertexSet outside_x = cover_ - x;
        const std::int64_t a1 = spec_.scaled_alpha1();
        const std::int64_t a2 = spec_.scaled_alpha2();

        std::vector<Candidate> candidates;
        candidates.reserve(rest_.size());
        for (Vertex u : rest_) {
            const auto to_x = static_cast<std::int64_t>(edges_to(g_, u, x));
            const auto to_rest = static_cast<std::int64_t>(edges_to(g_, u, outside_x));
            candidates.push_back({(a1 - a2) * to_x + a2 * to_rest, u});
        }
        const bool maximize = spec_.goal() == Goal::max;
        std::stable_sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
            return maximize ? a.score > b.score : a.score < b.score;
        });

        VertexSet chosen = x;
        VertexSet completion = g_.empty_set();
        std::int64_t total = value(spec_, g_, x).numerator();
        for (std::size_t i = 0; i < need; ++i) {
            completion.insert(candidates[i].vertex);
            chosen.insert(candidates[i].vertex);
            total += candidates[i].score;
        }
        if (edges_within(g_, completion) != 0) throw std::logic_error("completion is not an independent set");

        Solution s = make_solution(spec_, g_, std::move(chosen), "vc");
        if (s.value.numerator() != total) throw std::logic_error("completion scores do not add up to the value");
        if (!best || preferred(spec_.goal(), s, *best)) best = std::move(s);
    }

    const ProblemSpec& spec_;
    const Graph& g_;
    std::size_t k_;
    const VertexSet& cover_;
    std::vector<Vertex> cover_list_;
    std::vector<Vertex> rest_;
};

}  // namespace

VertexSet min_vertex_cover(const Graph& g) {
    VertexSet chosen = g.empty_set();
    for (std::size_t budget = 0;; ++budget) {
        chosen.clear();
        if (cover_within(g, chosen, budget)) return chosen;
    }
}

VcResult solve_vc(const ProblemSpec& spec, const Graph& g, std::size_t k, const VcOptions& options) {
    if (k > g.num_vertices()) {
        throw ContractViolation("k = " + std::to_string(k) + " exceeds n = " + std::to_string(g.num_vertices()));
    }
    VertexSet cover = options.cover ? *options.cover : min_vertex_cover(g);
    if (cover.universe() != g.num_vertices() || !covers(g, cover)) {
        throw ContractViolation("supplied set is not a vertex cover of the graph");
    }

    const VcSearch search(spec, g, k, cover);
    const std::size_t tasks = search.task_count();
    std::vector<std::optional<Solution>> results(tasks);
    std::vector<std::uint64_t> counts(tasks, 0);
    parallel_for(tasks, options.threads, [&](std::size_t i) { results[i] = search.run_from(i, counts[i]); });

    VcResult out{Solution{g.empty_set(), Value::zero(spec), "vc"}, VcStats{cover.size(), 0}, cover};
    std::optional<Solution> best;
    for (std::size_t i = 0; i < tasks; ++i) {
        out.stats.subsets_enumerated += counts[i];
        if (results[i] && (!best || preferred(spec.goal(), *results[i], *best))) best = std::move(results[i]);
    }
    if (!best) throw std::logic_error("no subset of the cover admits a completion");
    out.solution = std::move(*best);
    return out;
}

}  // namespace lgp
