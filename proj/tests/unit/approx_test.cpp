#include "lgp/approx.hpp"
#include "lgp/errors.hpp"
#include "lgp/generators.hpp"

#include "reference.hpp"

#include <doctest.h>

using namespace lgp;

TEST_SUITE("approximation") {
    TEST_CASE("star with two picks") {
        const auto r = approx_max_cut(gen::star(10), 2, Rational(1, 2));
        CHECK(r.mode == ApproxMode::greedy_top_k);
        CHECK(r.degree_sum == 11);
        CHECK((r.guarantee == Rational(7, 11)));
        REQUIRE(r.solution);
        CHECK(r.solution->vertices.contains(0));
        CHECK((r.solution->value.as_rational() == Rational(9)));
    }

    TEST_CASE("small epsilon is solved exactly") {
        const Graph g = gen::cycle(8);
        const auto r = approx_max_cut(g, 2, Rational(1, 100));
        CHECK(r.mode == ApproxMode::exact_branching);
        CHECK((r.guarantee == Rational(1)));
        CHECK((r.solution->value.as_rational() == ref::optimum(presets::max_cut(), g, 2)));
    }

    TEST_CASE("single vertex greedy is optimal") {
        std::mt19937_64 rng(167);
        for (int trial = 0; trial < 50; ++trial) {
            const Graph g = ref::random_graph(rng, 2, 9, 5);
            if (g.max_degree() == 0) continue;
            const Rational eps(1, static_cast<std::int64_t>(g.max_degree()));
            if (eps >= 1) continue;
            const auto r = approx_max_cut(g, 1, eps);
            CHECK(r.mode == ApproxMode::greedy_top_k);
            CHECK((r.solution->value.as_rational() == ref::optimum(presets::max_cut(), g, 1)));
        }
    }

    TEST_CASE("epsilon outside (0,1) is rejected") {
        CHECK_THROWS_AS(approx_max_cut(gen::star(3), 1, 0), ContractViolation);
        CHECK_THROWS_AS(approx_max_cut(gen::star(3), 1, 1), ContractViolation);
        CHECK_THROWS_AS(approx_max_cut(gen::star(3), 5, Rational(1, 2)), ContractViolation);
    }

    TEST_CASE("greedy bound and mode test on random graphs") {
        std::mt19937_64 rng(173);
        for (int trial = 0; trial < 300; ++trial) {
            const Graph g = ref::random_graph(rng, 4, 12, 8);
            const std::size_t k = 1 + trial % 3;
            if (k > g.num_vertices()) continue;
            const Rational eps(1 + trial % 9, 10);
            const auto r = approx_max_cut(g, k, eps);
            const auto delta = static_cast<std::int64_t>(g.max_degree());
            const auto kk = static_cast<std::int64_t>(k);
            const bool greedy = delta > 0 && eps * delta >= kk * kk;
            CHECK((r.mode == ApproxMode::greedy_top_k) == greedy);
            const Rational opt = ref::optimum(presets::max_cut(), g, k);
            const Rational got = r.solution->value.as_rational();
            CHECK(got >= (1 - eps) * opt);
            if (greedy) {
                CHECK((got >= r.degree_sum - kk * kk));
                CHECK(got >= r.guarantee * opt);
            } else {
                CHECK(got == opt);
            }
        }
    }

    TEST_CASE("min cut regimes") {
        std::mt19937_64 rng(179);
        const Graph g8 = gen::erdos_renyi(8, 0.4, 4, rng);
        const auto a = approx_min_cut(g8, 3, Rational(1, 2));
        CHECK(a.mode == ApproxMode::exhaustive);
        CHECK((a.solution->value.as_rational() == ref::optimum(presets::min_cut(), g8, 3)));

        const auto b = approx_min_cut(gen::empty_graph(1024), 2, Rational(1, 2));
        CHECK(b.mode == ApproxMode::unsupported);
        CHECK_FALSE(b.solution);

        const Graph c4 = gen::cycle(4);
        const auto c = approx_min_cut(c4, 2, Rational(1, 2));
        CHECK(c.mode == ApproxMode::exhaustive);
        CHECK((c.solution->value.as_rational() == ref::optimum(presets::min_cut(), c4, 2)));
        CHECK((c.guarantee == Rational(1)));
    }
}
