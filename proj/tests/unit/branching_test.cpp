#include "lgp/branching.hpp"
#include "lgp/errors.hpp"
#include "lgp/generators.hpp"

#include "reference.hpp"

#include <doctest.h>

using namespace lgp;

namespace {

std::vector<ProblemSpec> degrading_presets() {
    return {presets::coverage(), presets::max_cut(), presets::sparsest()};
}

}  // namespace

TEST_SUITE("alg1") {
    TEST_CASE("spec examples") {
        CHECK((alg1(presets::max_cut(), gen::star(3), 1).solution.value.as_rational() == Rational(3)));
        CHECK((alg1(presets::coverage(), gen::complete(3), 2).solution.value.as_rational() == Rational(3)));
        const auto r = alg1(presets::sparsest(), gen::path(4), 2);
        CHECK((r.solution.value.as_rational() == Rational(0)));
        CHECK(edges_within(gen::path(4), r.solution.vertices) == 0);
    }

    TEST_CASE("rejects non-degrading specs and oversized k") {
        CHECK_THROWS_AS(alg1(presets::densest(), gen::complete(3), 2), UnsupportedProblem);
        CHECK_THROWS_AS(alg1(presets::min_cut(), gen::complete(3), 2), UnsupportedProblem);
        CHECK_THROWS_AS(alg1(presets::max_cut(), gen::complete(3), 4), ContractViolation);
    }

    TEST_CASE("k = 0 visits only the root") {
        const auto r = alg1(presets::max_cut(), gen::cycle(4), 0);
        CHECK(r.solution.vertices.size() == 0);
        CHECK(r.stats.nodes_visited == 1);
        CHECK(r.stats.leaves == 1);
    }

    TEST_CASE("oracle equivalence and tree bound on random graphs") {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 150; ++trial) {
            const Graph g = ref::random_graph(rng, 1, 9, 4);
            std::vector<ProblemSpec> specs = degrading_presets();
            const ProblemSpec extra(trial % 2 ? Goal::max : Goal::min, ref::random_rational(rng),
                                    ref::random_rational(rng));
            if (is_degrading(extra)) specs.push_back(extra);
            for (const auto& spec : specs) {
                for (std::size_t k = 1; k <= std::min<std::size_t>(4, g.num_vertices()); ++k) {
                    const auto r = alg1(spec, g, k);
                    CHECK((r.solution.value.as_rational() == ref::optimum(spec, g, k)));
                    CHECK(r.solution.vertices.size() == k);
                    CHECK(r.stats.max_depth <= k);
                    CHECK(r.stats.leaves <= r.stats.nodes_visited);
                    CHECK(r.stats.nodes_visited <= tree_size_bound(g.max_degree() + 1, k));
                }
            }
        }
    }

    TEST_CASE("the literal contribution key can miss the optimum") {
        std::mt19937_64 rng(67);
        int misses = 0;
        for (int trial = 0; trial < 400 && misses == 0; ++trial) {
            const Graph g = ref::random_graph(rng, 4, 9, 4);
            for (std::size_t k = 2; k <= 3; ++k) {
                const auto r = alg1(presets::max_cut(), g, k, {1, GreedyKey::contribution});
                if (r.solution.value.as_rational() != ref::optimum(presets::max_cut(), g, k)) ++misses;
            }
        }
        CHECK(misses > 0);
    }

    TEST_CASE("parallel runs match serial runs") {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = ref::random_graph(rng, 6, 12, 4);
            const auto a = alg1(presets::coverage(), g, 4, {1});
            const auto b = alg1(presets::coverage(), g, 4, {4});
            CHECK(a.solution.vertices == b.solution.vertices);
            CHECK(a.stats == b.stats);
        }
    }
}

TEST_SUITE("alg2") {
    TEST_CASE("spec examples") {
        const Graph two = gen::disjoint_union(gen::complete(3), gen::complete(3));
        CHECK((alg2(presets::densest(), two, 3).solution.value.as_rational() == Rational(3)));
        CHECK((alg2(presets::densest(), gen::path(4), 2).solution.value.as_rational() == Rational(1)));
        const auto z = alg2(presets::densest(), gen::path(4), 0);
        CHECK(z.solution.vertices.size() == 0);
        CHECK((z.solution.value.as_rational() == Rational(0)));
        CHECK_THROWS_AS(alg2(presets::densest(), gen::path(4), 5), ContractViolation);
    }

    TEST_CASE("best connected extension") {
        const auto a = best_connected_extension(presets::densest(), gen::path(3), VertexSet(3), 2);
        REQUIRE(a);
        CHECK(a->members() == std::vector<Vertex>{0, 1});
        const auto b = best_connected_extension(presets::densest(), gen::complete(3), VertexSet(3, {0}), 2);
        REQUIRE(b);
        CHECK(b->members() == std::vector<Vertex>{1, 2});
        CHECK_FALSE(best_connected_extension(presets::densest(), gen::empty_graph(3), VertexSet(3), 2));
    }

    TEST_CASE("batched extensions agree with the single-size search") {
        std::mt19937_64 rng(73);
        for (int trial = 0; trial < 60; ++trial) {
            const Graph g = ref::random_graph(rng, 3, 9, 4);
            const ProblemSpec spec(Goal::max, ref::random_rational(rng), ref::random_rational(rng));
            const VertexSet taken(g.num_vertices(), {0});
            const auto all = best_connected_extensions(spec, g, taken, 3);
            for (std::size_t i = 1; i <= 3; ++i) {
                CHECK(all[i - 1] == best_connected_extension(spec, g, taken, i));
            }
        }
    }

    TEST_CASE("exact on non-degrading specs and on the boundary") {
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 150; ++trial) {
            const Graph g = ref::random_graph(rng, 1, 9, 4);
            std::vector<ProblemSpec> specs{presets::densest(), presets::min_cut(), ProblemSpec(Goal::max, 2, 1),
                                           ProblemSpec(Goal::min, 2, 1)};
            const ProblemSpec extra(trial % 2 ? Goal::max : Goal::min, ref::random_rational(rng),
                                    ref::random_rational(rng));
            if (!is_degrading(extra)) specs.push_back(extra);
            for (const auto& spec : specs) {
                for (std::size_t k = 1; k <= std::min<std::size_t>(4, g.num_vertices()); ++k) {
                    const auto r = alg2(spec, g, k);
                    CHECK((r.solution.value.as_rational() == ref::optimum(spec, g, k)));
                    CHECK(r.stats.nodes_visited <= tree_size_bound(k * (k + 1) / 2, k));
                }
            }
        }
    }

    TEST_CASE("closed-neighborhood branching is exact for every spec") {
        std::mt19937_64 rng(83);
        Alg2Options closed;
        closed.branching = Alg2Branching::closed_neighborhood;
        for (int trial = 0; trial < 120; ++trial) {
            const Graph g = ref::random_graph(rng, 1, 9, 4);
            std::vector<ProblemSpec> specs = ref::presets();
            specs.emplace_back(trial % 2 ? Goal::max : Goal::min, ref::random_rational(rng),
                               ref::random_rational(rng));
            for (const auto& spec : specs) {
                for (std::size_t k = 1; k <= std::min<std::size_t>(4, g.num_vertices()); ++k) {
                    const auto r = alg2(spec, g, k, closed);
                    CHECK((r.solution.value.as_rational() == ref::optimum(spec, g, k)));
                    if (is_degrading(spec)) CHECK(r.solution.value == alg1(spec, g, k).solution.value);
                }
            }
        }
    }

    TEST_CASE("allowed restricts every chosen vertex") {
        const Graph p = gen::path(6);
        Alg2Options o;
        o.allowed = VertexSet(6, {0, 1, 4, 5});
        const auto r = alg2_search(presets::densest(), p, 2, o);
        REQUIRE(r.solution);
        CHECK(r.solution->vertices.is_subset_of(*o.allowed));
        CHECK((r.solution->value.as_rational() == Rational(1)));
        o.allowed = VertexSet(6, {0});
        CHECK_FALSE(alg2_search(presets::densest(), p, 2, o).solution);
    }

    TEST_CASE("parallel runs match serial runs") {
        std::mt19937_64 rng(89);
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = ref::random_graph(rng, 6, 12, 4);
            Alg2Options serial, parallel;
            parallel.threads = 4;
            const auto a = alg2(presets::densest(), g, 4, serial);
            const auto b = alg2(presets::densest(), g, 4, parallel);
            CHECK(a.solution.vertices == b.solution.vertices);
            CHECK(a.stats == b.stats);
        }
    }

    TEST_CASE("tree size bound saturates") {
        CHECK(tree_size_bound(3, 2) == 13);
        CHECK(tree_size_bound(0, 4) == 1);
        CHECK(tree_size_bound(1, 4) == 5);
        CHECK(tree_size_bound(1000000, 10) == UINT64_MAX);
    }
}
