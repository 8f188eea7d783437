#include "lgp/enumerate.hpp"
#include "lgp/errors.hpp"
#include "lgp/generators.hpp"
#include "lgp/graph.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace lgp;

namespace {

Graph k3() { return gen::complete(3); }

std::set<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& sets) {
    std::set<std::vector<Vertex>> out;
    for (const auto& s : sets) out.insert(s.members());
    return out;
}

}  // namespace

TEST_SUITE("vertex set") {
    TEST_CASE("membership and size stay in sync") {
        VertexSet s(10, {1, 3, 5});
        CHECK(s.size() == 3);
        s.insert(3);
        CHECK(s.size() == 3);
        s.erase(1);
        CHECK(s.size() == 2);
        CHECK(s.members() == std::vector<Vertex>{3, 5});
        CHECK(s.complement().size() == 8);
        CHECK(s.first() == 3);
    }

    TEST_CASE("set algebra") {
        const VertexSet a(70, {0, 64, 69});
        const VertexSet b(70, {64, 1});
        CHECK((a | b).members() == std::vector<Vertex>{0, 1, 64, 69});
        CHECK((a & b).members() == std::vector<Vertex>{64});
        CHECK((a - b).members() == std::vector<Vertex>{0, 69});
        CHECK(a.intersection_size(b) == 1);
        CHECK(VertexSet(70, {64}).is_subset_of(a));
        CHECK(VertexSet::full(70).complement().size() == 0);
    }

    TEST_CASE("mixing universes is rejected") {
        VertexSet a(3);
        CHECK_THROWS_AS(a |= VertexSet(4), ContractViolation);
        CHECK_THROWS_AS(a.insert(3), ContractViolation);
    }

    TEST_CASE("lexicographic order compares sorted member lists") {
        CHECK(lex_less(VertexSet(5, {0, 4}), VertexSet(5, {1, 2})));
        CHECK(lex_less(VertexSet(5, {0, 1}), VertexSet(5, {0, 2})));
        CHECK_FALSE(lex_less(VertexSet(5, {0, 2}), VertexSet(5, {0, 2})));
    }
}

TEST_SUITE("graph") {
    TEST_CASE("parse path and triangle") {
        const Graph p = parse_graph("3 2\n0 1\n1 2");
        CHECK(p.num_vertices() == 3);
        CHECK(p.num_edges() == 2);
        CHECK(p.adjacent(0, 1));
        CHECK_FALSE(p.adjacent(0, 2));

        const Graph t = parse_graph("3 3\n0 1\n1 2\n0 2");
        CHECK(t.num_edges() == 3);
        CHECK(t.min_degree() == 2);
    }

    TEST_CASE("parse errors name the line") {
        auto line_of = [](std::string_view text) {
            try {
                parse_graph(text);
            } catch (const ParseError& e) {
                return e.line();
            }
            return std::size_t{0};
        };
        CHECK(line_of("2 1\n0 0") == 2);
        CHECK(line_of("3 2\n0 1\n1 0") == 3);
        CHECK(line_of("3 1\n0 3") == 2);
        CHECK(line_of("3 1\n0 x") == 2);
        CHECK(line_of("3 2\n0 1") > 0);
        CHECK(line_of("3 1\n0 1\n1 2") == 3);
    }

    TEST_CASE("comments and DIMACS input") {
        const Graph g = parse_graph("# a path\n3 2\n0 1\n# middle\n1 2\n");
        CHECK(g.num_edges() == 2);
        const Graph d = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
        CHECK(d.num_edges() == 3);
        CHECK(d.adjacent(0, 2));
        CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
    }

    TEST_CASE("format round trip") {
        std::mt19937_64 rng(3);
        const Graph g = gen::erdos_renyi(9, 0.4, 5, rng);
        const Graph h = parse_graph(format_graph(g));
        CHECK(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end()));
    }

    TEST_CASE("constructor rejects non-simple input") {
        CHECK_THROWS_AS(Graph(2, {{0, 0}}), ContractViolation);
        CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), ContractViolation);
        CHECK_THROWS_AS(Graph(2, {{0, 2}}), ContractViolation);
    }

    TEST_CASE("edge counts") {
        const Graph g = k3();
        CHECK(edges_within(g, VertexSet(3, {0, 1})) == 1);
        CHECK(edges_within(g, VertexSet(3, {0, 1, 2})) == 3);
        CHECK(edges_within(g, VertexSet(3)) == 0);
        CHECK(edges_crossing(g, VertexSet(3, {0, 1})) == 2);
        CHECK(edges_crossing(g, VertexSet(3)) == 0);
        const Graph s = gen::star(3);
        CHECK(edges_crossing(s, VertexSet(4, {0})) == 3);
        CHECK_THROWS_AS(edges_within(g, VertexSet(4)), ContractViolation);
    }

    TEST_CASE("edge counts split m") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const Graph g = ref::random_graph(rng, 1, 8, 5);
            std::uniform_int_distribution<ref::Mask> pick(0, (ref::Mask{1} << g.num_vertices()) - 1);
            const VertexSet s = ref::from_mask(g.num_vertices(), pick(rng));
            CHECK(edges_within(g, s) + edges_crossing(g, s) + edges_within(g, s.complement()) == g.num_edges());
            const auto c = ref::count_edges(g, ref::to_mask(s));
            CHECK(edges_within(g, s) == static_cast<std::size_t>(c.inside));
            CHECK(edges_crossing(g, s) == static_cast<std::size_t>(c.crossing));
        }
    }

    TEST_CASE("degrees and neighborhoods") {
        const Graph s = gen::star(3);
        CHECK(s.degree(0) == 3);
        CHECK(s.max_degree() == 3);
        CHECK(s.min_degree() == 1);
        CHECK(s.neighborhood(1, false).members() == std::vector<Vertex>{0});
        CHECK(s.neighborhood(1, true).members() == std::vector<Vertex>{0, 1});
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < 4; ++v) degree_sum += s.degree(v);
        CHECK(degree_sum == 2 * s.num_edges());
    }

    TEST_CASE("connected components partition the vertices") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const Graph g = ref::random_graph(rng, 1, 10, 3);
            const auto parts = connected_components(g);
            VertexSet seen = g.empty_set();
            for (const auto& p : parts) {
                CHECK_FALSE(seen.intersects(p));
                seen |= p;
                CHECK(is_connected(g, p));
                CHECK(edges_crossing(g, p) == 0);
            }
            CHECK(seen.size() == g.num_vertices());
        }
    }

    TEST_CASE("induced subgraph keeps the mapping") {
        const Graph p = gen::path(4);
        const auto sub = induced_subgraph(p, VertexSet(4, {1, 2, 3}));
        CHECK(sub.graph.num_vertices() == 3);
        CHECK(sub.graph.num_edges() == 2);
        CHECK(sub.original == std::vector<Vertex>{1, 2, 3});
    }

    TEST_CASE("relabel preserves adjacency") {
        const Graph p = gen::path(3);
        const std::vector<Vertex> perm{2, 0, 1};
        const Graph q = relabel(p, perm);
        CHECK(q.adjacent(2, 0));
        CHECK(q.adjacent(0, 1));
        CHECK_FALSE(q.adjacent(2, 1));
    }
}

TEST_SUITE("enumerate connected") {
    TEST_CASE("triangle from root 0") {
        CHECK(as_lists(connected_sets(k3(), 0, 2)) ==
              std::set<std::vector<Vertex>>{{0}, {0, 1}, {0, 2}});
    }

    TEST_CASE("path from root 0") {
        CHECK(as_lists(connected_sets(gen::path(3), 0, 3)) ==
              std::set<std::vector<Vertex>>{{0}, {0, 1}, {0, 1, 2}});
    }

    TEST_CASE("isolated vertex") {
        CHECK(as_lists(connected_sets(gen::empty_graph(3), 1, 3)) == std::set<std::vector<Vertex>>{{1}});
    }

    TEST_CASE("bad arguments") {
        auto ignore = [](const VertexSet&) {};
        CHECK_THROWS_AS(enumerate_connected(k3(), 3, 2, ignore), ContractViolation);
        CHECK_THROWS_AS(enumerate_connected(k3(), 0, 0, ignore), ContractViolation);
    }

    TEST_CASE("union over roots equals brute force with no duplicates") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 150; ++trial) {
            const Graph g = ref::random_graph(rng, 1, 8, 4);
            for (std::size_t size = 1; size <= 4; ++size) {
                std::vector<ref::Mask> got;
                for (Vertex r = 0; r < g.num_vertices(); ++r) {
                    enumerate_connected(g, r, size, [&](const VertexSet& s) {
                        CHECK(s.first() == r);
                        got.push_back(ref::to_mask(s));
                    });
                }
                std::vector<ref::Mask> sorted = got;
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                auto expected = ref::connected_sets(g, size);
                std::sort(expected.begin(), expected.end());
                CHECK(sorted == expected);
            }
        }
    }

    TEST_CASE("allowed mask restricts the search") {
        const Graph p = gen::path(4);
        const VertexSet allowed(4, {0, 1, 3});
        std::vector<VertexSet> got;
        enumerate_connected(p, 0, 4, [&](const VertexSet& s) { got.push_back(s); }, &allowed);
        CHECK(as_lists(got) == std::set<std::vector<Vertex>>{{0}, {0, 1}});
        CHECK(count_connected(p, 0, 4) == 4);
    }
}

TEST_SUITE("generators") {
    TEST_CASE("degree cap and shapes") {
        std::mt19937_64 rng(1);
        CHECK(gen::erdos_renyi(20, 0.9, 3, rng).max_degree() <= 3);
        const Graph t = gen::random_tree(15, rng);
        CHECK(t.num_edges() == 14);
        CHECK(is_connected(t, t.all_vertices()));
        const Graph s = gen::split_graph(4, 5, 0.5, rng);
        CHECK(edges_within(s, VertexSet(9, {0, 1, 2, 3})) == 6);
        CHECK(edges_within(s, VertexSet(9, {4, 5, 6, 7, 8})) == 0);
        CHECK(gen::raise_min_degree(gen::empty_graph(6), 2, rng).min_degree() >= 2);
        CHECK(gen::cycle(5).num_edges() == 5);
        CHECK(gen::disjoint_union(gen::complete(3), gen::complete(3)).num_edges() == 6);
    }
}
