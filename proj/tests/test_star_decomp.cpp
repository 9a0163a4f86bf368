#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "mec/census.hpp"
#include "mec/families.hpp"
#include "mec/generate.hpp"
#include "mec/graph6.hpp"
#include "mec/star_decomp.hpp"
#include "mec/structure.hpp"

#include "oracles.hpp"

using namespace mec;

namespace {

std::vector<std::uint32_t> cover_masks(const std::vector<VertexCover>& covers) {
    std::vector<std::uint32_t> masks;
    for (const auto& c : covers) masks.push_back(c.nodes);
    return masks;
}

// Random (not necessarily minimum) cover: greedy over a shuffled node order.
VertexCover random_cover(std::mt19937& rng, const Skeleton& g) {
    std::vector<int> order(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uint32_t chosen = 0;
    for (int v : order) {
        if (covers_all_edges(g, chosen)) break;
        bool uncovered_incident = false;
        std::uint32_t nbrs = g.neighbors(v);
        while (nbrs) {
            const int w = lowest_bit(nbrs);
            nbrs &= nbrs - 1;
            if (!((chosen >> v) & 1u) && !((chosen >> w) & 1u)) uncovered_incident = true;
        }
        if (uncovered_incident) chosen |= 1u << v;
    }
    return {g, chosen};
}

std::vector<int> shuffled_order(std::mt19937& rng, const VertexCover& c) {
    auto order = c.node_list();
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

}  // namespace

TEST_CASE("minimum vertex covers") {
    CHECK(cover_masks(minimum_vertex_covers(make_cycle(4))) ==
          std::vector<std::uint32_t>{0b0101, 0b1010});
    CHECK(cover_masks(minimum_vertex_covers(make_path(3))) == std::vector<std::uint32_t>{0b010});
    CHECK(cover_masks(minimum_vertex_covers(make_complete_bipartite(3, 3))) ==
          std::vector<std::uint32_t>{0b000111, 0b111000});
    CHECK(cover_masks(minimum_vertex_covers(make_empty(3))) == std::vector<std::uint32_t>{0});

    SUBCASE("matches the ascending-popcount subset oracle") {
        std::mt19937 rng(555);
        for (int trial = 0; trial < 25; ++trial) {
            const Skeleton g = random_graph(rng, 3 + trial % 6, 0.5);
            auto expect = oracle::min_vertex_covers(g);
            std::sort(expect.begin(), expect.end());
            CHECK(cover_masks(minimum_vertex_covers(g)) == expect);
        }
    }
}

TEST_CASE("decomposition from cover") {
    SUBCASE("4-cycle with cover {0,2} gives two 2-stars") {
        const Skeleton c4 = make_cycle(4);
        const auto s = decomposition_from_cover(c4, {c4, 0b0101}, {0, 2});
        REQUIRE(is_valid_partition(s));
        CHECK(size_vector(s, 2) == std::vector<int>{2, 2});
    }
    SUBCASE("path with cover {1}") {
        const Skeleton p = make_path(3);
        const auto s = decomposition_from_cover(p, {p, 0b010}, {1});
        CHECK(s.stars == std::vector<Star>{{1, 0b101}});
    }
    SUBCASE("double star S_2(2,2), order (0,1), sizes (3,2)") {
        const Skeleton g = make_double_star(2, 2);
        const auto s = decomposition_from_cover(g, {g, 0b11}, {0, 1});
        CHECK(size_vector(s, 2) == std::vector<int>{3, 2});
    }
    SUBCASE("P_4 with both interior nodes covered") {
        // On this witness a star built from N[2] minus N[1] would lose the
        // edge {2,3}; earliest-covering-center assignment keeps the partition.
        const Skeleton p4 = make_path(4);
        const auto s = decomposition_from_cover(p4, {p4, 0b0110}, {1, 2});
        REQUIRE(is_valid_partition(s));
        CHECK(s.stars == std::vector<Star>{{1, 0b0101}, {2, 0b1000}});
    }
    SUBCASE("non-covers are rejected") {
        const Skeleton c4 = make_cycle(4);
        CHECK_THROWS_AS(decomposition_from_cover(c4, {c4, 0b0001}, {0}), std::invalid_argument);
        CHECK_THROWS_AS(decomposition_from_cover(c4, {c4, 0b0101}, {0}), std::invalid_argument);
    }
    SUBCASE("partition invariant holds for random covers and orders") {
        std::mt19937 rng(808);
        for (int trial = 0; trial < 40; ++trial) {
            const Skeleton g = random_graph(rng, 3 + trial % 8, 0.5);
            const VertexCover c = random_cover(rng, g);
            const auto s = decomposition_from_cover(g, c, shuffled_order(rng, c));
            REQUIRE(is_valid_partition(s));
            CHECK(s.center_mask() == c.nodes);  // trivial stars keep their centers
            CHECK(popcount32(reduce(s).center_mask()) <= c.size());
        }
    }
}

TEST_CASE("induced decomposition and reduce") {
    const Skeleton path = make_path(3);
    Dag collider{path, {}};
    collider.parents[1] = 0b101;
    const auto s = induced_decomposition(collider);
    CHECK(s.stars == std::vector<Star>{{0, 0}, {1, 0b101}, {2, 0}});
    CHECK(reduce(s).stars == std::vector<Star>{{1, 0b101}});

    SUBCASE("4-cycle DAG with sinks 0 and 2") {
        const Skeleton c4 = make_cycle(4);
        Dag d{c4, {}};
        d.parents[0] = 0b1010;
        d.parents[2] = 0b1010;
        const auto r = reduce(induced_decomposition(d));
        CHECK(r.stars == std::vector<Star>{{0, 0b1010}, {2, 0b1010}});
    }
    SUBCASE("star with center sink") {
        const Skeleton star = make_star(3);
        Dag d{star, {}};
        d.parents[0] = 0b1110;
        CHECK(reduce(induced_decomposition(d)).stars == std::vector<Star>{{0, 0b1110}});
    }
    SUBCASE("reduced induced center set covers the edges of any DAG") {
        std::mt19937 rng(21);
        for (int trial = 0; trial < 10; ++trial) {
            const Skeleton g = random_graph(rng, 4 + trial % 4, 0.5);
            for_each_acyclic_orientation(g, 1u << 18, [&](const Dag& d) {
                REQUIRE(covers_all_edges(g, reduce(induced_decomposition(d)).center_mask()));
            });
        }
    }
}

TEST_CASE("size vectors") {
    const Skeleton c4 = make_cycle(4);
    const auto min_decomp = decomposition_from_cover(c4, {c4, 0b0101}, {0, 2});
    CHECK(size_vector(min_decomp, 4) == std::vector<int>{2, 2, 0, 0});

    StarDecomposition all_edges{c4, {{0, 0b0010}, {1, 0b0100}, {2, 0b1000}, {0, 0b1000}}};
    REQUIRE(is_valid_partition(all_edges));
    CHECK(size_vector(all_edges, 4) == std::vector<int>{1, 1, 1, 1});

    const Skeleton k33 = make_complete_bipartite(3, 3);
    const auto sides = decomposition_from_cover(k33, {k33, 0b000111}, {0, 1, 2});
    CHECK(size_vector(sides, 9) == std::vector<int>{3, 3, 3, 0, 0, 0, 0, 0, 0});

    CHECK_THROWS_AS(size_vector(sides, 2), std::invalid_argument);

    SUBCASE("entries always sum to the edge count") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            const Skeleton g = random_graph(rng, 3 + trial % 7, 0.5);
            const VertexCover c = random_cover(rng, g);
            const auto s = decomposition_from_cover(g, c, shuffled_order(rng, c));
            const auto v = size_vector(s, g.node_count());
            CHECK(std::accumulate(v.begin(), v.end(), 0) == g.edge_count());
        }
    }
}

TEST_CASE("dagify") {
    SUBCASE("already-acyclic input comes back unchanged") {
        const Skeleton c4 = make_cycle(4);
        const auto s = decomposition_from_cover(c4, {c4, 0b0101}, {0, 2});
        const Dag d = dagify(s);
        CHECK(d.parents[0] == 0b1010u);
        CHECK(d.parents[2] == 0b1010u);
        CHECK(d.parents[1] == 0u);
        CHECK(d.parents[3] == 0u);
    }
    SUBCASE("cyclically-oriented 6-cycle needs exactly one reorientation") {
        const Skeleton c6 = make_cycle(6);
        StarDecomposition s{c6, {}};
        for (int i = 0; i < 6; ++i) s.stars.push_back({(i + 1) % 6, 1u << i});
        REQUIRE(is_valid_partition(s));
        const Dag d = dagify(s);
        CHECK(d.is_acyclic());
        CHECK(d.parents[0] == ((1u << 1) | (1u << 5)));  // node 0 became the sink
        CHECK(d.parents[2] == (1u << 1));
        CHECK(d.parents[3] == (1u << 2));
        CHECK(d.parents[4] == (1u << 3));
        CHECK(d.parents[5] == (1u << 4));
    }
    SUBCASE("tree decompositions are already acyclic") {
        const Skeleton p4 = make_path(4);
        StarDecomposition s{p4, {{0, 0b0010}, {1, 0b0100}, {2, 0b1000}}};
        REQUIRE(is_valid_partition(s));
        const Dag d = dagify(s);
        CHECK(d.parents[0] == 0b0010u);
        CHECK(d.parents[1] == 0b0100u);
        CHECK(d.parents[2] == 0b1000u);
    }
    SUBCASE("acyclic output with centers inside the input center set") {
        std::mt19937 rng(1312);
        for (int trial = 0; trial < 60; ++trial) {
            const Skeleton g = random_triangle_free_graph(rng, 4 + trial % 7, 0.5);
            const VertexCover c = random_cover(rng, g);
            const auto s = decomposition_from_cover(g, c, shuffled_order(rng, c));
            const Dag d = dagify(s);
            REQUIRE(d.is_acyclic());
            REQUIRE(d.orientation_matches_skeleton());
            const std::uint32_t centers = reduce(induced_decomposition(d)).center_mask();
            REQUIRE((centers & ~s.center_mask()) == 0);
        }
    }
    SUBCASE("rejects non-partitions") {
        const Skeleton c4 = make_cycle(4);
        StarDecomposition bad{c4, {{0, 0b1010}}};
        CHECK_THROWS_AS(dagify(bad), std::invalid_argument);
    }
    SUBCASE("sink-selection exhaustion is reported, not papered over") {
        // Triangle-free witness: a directed square 2->3->4->5->2 whose nodes
        // sit inside N[0] u N[1], plus pendant leaves that push the hubs'
        // degrees above the square's. The procedure sinks 0, then 1, and the
        // surviving square has no pickable node left.
        Skeleton g(10);
        for (auto [u, v] : {std::pair{2, 3}, {3, 4}, {4, 5}, {5, 2}, {0, 2}, {0, 4}, {1, 3},
                            {1, 5}, {0, 6}, {0, 7}, {1, 8}, {1, 9}})
            g.add_edge(u, v);
        REQUIRE(is_triangle_free(g));
        StarDecomposition s{g, {}};
        s.stars.push_back({0, (1u << 4) | (1u << 6) | (1u << 7)});
        s.stars.push_back({1, (1u << 5) | (1u << 8) | (1u << 9)});
        s.stars.push_back({2, (1u << 0) | (1u << 5)});
        s.stars.push_back({3, (1u << 1) | (1u << 2)});
        s.stars.push_back({4, 1u << 3});
        s.stars.push_back({5, 1u << 4});
        REQUIRE(is_valid_partition(s));
        CHECK_THROWS_AS(dagify(s), DagifyError);
    }
}

TEST_CASE("is_induced_by_some_dag") {
    const Skeleton c4 = make_cycle(4);
    StarDecomposition all_edges{c4, {{0, 0b0010}, {1, 0b0100}, {2, 0b1000}, {0, 0b1000}}};
    CHECK(!is_induced_by_some_dag(all_edges));

    const auto opposite = decomposition_from_cover(c4, {c4, 0b0101}, {0, 2});
    CHECK(is_induced_by_some_dag(opposite));

    const Skeleton p = make_path(3);
    CHECK(is_induced_by_some_dag({p, {{1, 0b101}}}));
}

TEST_CASE("minimum star decompositions") {
    SUBCASE("4-cycle: both are pairs of 2-stars") {
        const auto all = enumerate_min_star_decompositions(make_cycle(4));
        REQUIRE(all.size() == 2);
        for (const auto& s : all) CHECK(size_vector(s, 2) == std::vector<int>{2, 2});
    }
    SUBCASE("S_2(2,3): two nonisomorphic shapes of size two") {
        const auto all = enumerate_min_star_decompositions(make_double_star(2, 3));
        REQUIRE(all.size() == 2);
        std::vector<std::vector<int>> shapes;
        for (const auto& s : all) shapes.push_back(size_vector(s, 2));
        std::sort(shapes.begin(), shapes.end());
        CHECK(shapes == std::vector<std::vector<int>>{{3, 3}, {4, 2}});
    }
    SUBCASE("K_{3,3}: exactly the two side decompositions") {
        const auto all = enumerate_min_star_decompositions(make_complete_bipartite(3, 3));
        REQUIRE(all.size() == 2);
        CHECK(all[0].center_mask() == 0b000111u);
        CHECK(all[1].center_mask() == 0b111000u);
    }
    SUBCASE("reduced size equals minimum cover size, against the assignment oracle") {
        std::mt19937 rng(2024);
        int done = 0;
        while (done < 25) {
            const Skeleton g = random_graph(rng, 3 + done % 8, 0.45);
            if (g.edge_count() > 14) continue;
            ++done;
            const int tau = minimum_vertex_cover_size(g);
            CHECK(oracle::min_star_decomposition_size(g) == tau);
            for (const auto& s : enumerate_min_star_decompositions(g)) {
                REQUIRE(is_valid_partition(s));
                CHECK(s.star_count() == tau);
            }
        }
    }
    SUBCASE("tiny budgets are refused") {
        CHECK_THROWS_AS(enumerate_min_star_decompositions(make_cycle(4), 1), BudgetExceeded);
    }
}

TEST_CASE("structural immorality number") {
    using App = StructuralImmoralityNumber::Applicability;
    SUBCASE("4-cycle: applicable, value 2") {
        const auto r = structural_immorality_number(make_cycle(4));
        REQUIRE(r.applicable());
        CHECK(*r.value == 2);
        REQUIRE(r.witness.has_value());
        CHECK(is_valid_partition(*r.witness));
    }
    SUBCASE("K_{3,3}: applicable, value 9") {
        const auto r = structural_immorality_number(make_complete_bipartite(3, 3));
        REQUIRE(r.applicable());
        CHECK(*r.value == 9);
    }
    SUBCASE("S_2(2,3): not applicable") {
        const auto r = structural_immorality_number(make_double_star(2, 3));
        CHECK(r.applicability == App::not_applicable);
        CHECK(!r.value.has_value());
    }
    SUBCASE("triangles rule it out") {
        CHECK(structural_immorality_number(make_complete(3)).applicability ==
              App::not_applicable);
    }
    SUBCASE("blown budget reports unknown, distinct from not applicable") {
        const auto r = structural_immorality_number(make_cycle(4), 1);
        CHECK(r.applicability == App::unknown);
    }
    SUBCASE("agrees exactly with the census whenever applicable") {
        for (int n = 2; n <= 6; ++n)
            for (const auto& g : nonisomorphic_connected_graphs(n)) {
                if (!is_triangle_free(g)) continue;
                const auto r = structural_immorality_number(g);
                if (!r.applicable()) continue;
                CHECK(*r.value == immorality_number(census(g)));
            }
    }
}

namespace {

// m(G) on a triangle-free skeleton is the best sum of C(|S_i|,2) over the
// minimum decompositions some DAG induces.
void check_best_induced_decomposition(int n) {
    for (const auto& g : nonisomorphic_connected_graphs(n)) {
        if (!is_triangle_free(g)) continue;
        long long best = -1;
        for (const auto& s : enumerate_min_star_decompositions(g)) {
            if (!is_induced_by_some_dag(s)) continue;
            long long value = 0;
            for (const auto& star : s.stars)
                value += static_cast<long long>(star.size()) * (star.size() - 1) / 2;
            best = std::max(best, value);
        }
        CHECK(best == immorality_number(census(g)));
    }
}

}  // namespace

TEST_CASE("immorality number equals the best DAG-induced minimum decomposition") {
    for (int n = 2; n <= 7; ++n) check_best_induced_decomposition(n);
}

// A few extra seconds; runs under the slow ctest configuration.
TEST_CASE("best-induced-decomposition sweep at n=8" * doctest::skip()) {
    check_best_induced_decomposition(8);
}

TEST_CASE("maximum-weight minimum decompositions are induced by DAGs") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : nonisomorphic_connected_graphs(n)) {
            if (!is_triangle_free(g)) continue;
            const auto decomps = enumerate_min_star_decompositions(g);
            long long best = -1;
            std::vector<const StarDecomposition*> argmax;
            for (const auto& s : decomps) {
                const auto v = size_vector(s, s.star_count());
                long long dot = 0;
                for (int x : v) dot += static_cast<long long>(x) * x;
                if (dot > best) {
                    best = dot;
                    argmax.clear();
                }
                if (dot == best) argmax.push_back(&s);
            }
            for (const auto* s : argmax) CHECK(is_induced_by_some_dag(*s));
        }
}

TEST_CASE("closed forms") {
    CHECK(star_immorality_number(3) == 3);
    CHECK(k2p_immorality_number(4) == 12);
    CHECK(double_star_pp_immorality_number(2) == 4);
    CHECK(kpp_immorality_number(3) == 9);

    SUBCASE("values match the exhaustive census") {
        for (int p = 1; p <= 4; ++p)
            CHECK(star_immorality_number(p) == immorality_number(census(make_star(p))));
        for (int p = 2; p <= 4; ++p)
            CHECK(k2p_immorality_number(p) ==
                  immorality_number(census(make_complete_bipartite(2, p))));
        for (int p = 1; p <= 2; ++p)
            CHECK(double_star_pp_immorality_number(p) ==
                  immorality_number(census(make_double_star(p, p))));
        CHECK(kpp_immorality_number(2) ==
              immorality_number(census(make_complete_bipartite(2, 2))));
        CHECK(kpp_immorality_number(3) ==
              immorality_number(census(make_complete_bipartite(3, 3))));
    }
    SUBCASE("circulant closed form with hypotheses checked") {
        const auto r = circulant_immorality_number(8, {1, 3});
        REQUIRE(r.value.has_value());
        CHECK(*r.value == 24);
        CHECK(circulant_immorality_number(5, {1}).violated_hypothesis == "p is odd");
        CHECK(circulant_immorality_number(6, {1, 2}).violated_hypothesis ==
              "graph has a triangle");
        CHECK(circulant_immorality_number(8, {2}).violated_hypothesis ==
              "no unit in the connection set (no spanning cycle)");
        CHECK(circulant_immorality_number(8, {1, 4}).violated_hypothesis ==
              "maximum independent set size is not p/2");
    }
    SUBCASE("dispatcher") {
        CHECK(*closed_form_immorality_number("kpp", {3}).value == 9);
        CHECK(*closed_form_immorality_number("circulant", {8, 1, 3}).value == 24);
        CHECK_THROWS_AS(closed_form_immorality_number("nope", {1}), std::invalid_argument);
    }
}

TEST_CASE("reduction: vertex cover from a maximum-immorality DAG") {
    SUBCASE("path") {
        const CensusRecord r = census(make_path(3));
        const auto cover =
            vertex_cover_from_max_immorality_dag(max_immorality_dag(r), immorality_number(r));
        CHECK(cover.nodes == 0b010u);
    }
    SUBCASE("4-cycle") {
        const CensusRecord r = census(make_cycle(4));
        const auto cover =
            vertex_cover_from_max_immorality_dag(max_immorality_dag(r), immorality_number(r));
        CHECK((cover.nodes == 0b0101u || cover.nodes == 0b1010u));
    }
    SUBCASE("K_{3,3} yields one full side") {
        const CensusRecord r = census(make_complete_bipartite(3, 3));
        const auto cover =
            vertex_cover_from_max_immorality_dag(max_immorality_dag(r), immorality_number(r));
        CHECK((cover.nodes == 0b000111u || cover.nodes == 0b111000u));
    }
    SUBCASE("triangles are rejected") {
        const CensusRecord r = census(make_complete(3));
        CHECK_THROWS_AS(
            vertex_cover_from_max_immorality_dag(max_immorality_dag(r), immorality_number(r)),
            std::invalid_argument);
    }
    SUBCASE("non-attaining DAGs are rejected") {
        Dag chain{make_path(3), {}};
        chain.parents[1] = 0b001;
        chain.parents[2] = 0b010;
        CHECK_THROWS_AS(vertex_cover_from_max_immorality_dag(chain, 1), std::invalid_argument);
    }
    SUBCASE("spider regression: attaining classes differ in center count") {
        // Hub 0 with legs 4-1, 5-2, 6-3. m = 3 is attained both by three
        // collider middles (centers {4,5,6}, minimum) and by the hub as a
        // full sink (centers {0,4,5,6}, not minimum); the DAG selection must
        // hand the reduction the former.
        const Skeleton spider = parse_graph6("F?qc_");
        REQUIRE(is_triangle_free(spider));
        const CensusRecord r = census(spider);
        CHECK(immorality_number(r) == 3);
        const auto cover =
            vertex_cover_from_max_immorality_dag(max_immorality_dag(r), immorality_number(r));
        CHECK(cover.nodes == ((1u << 4) | (1u << 5) | (1u << 6)));
    }
    SUBCASE("always a minimum cover on triangle-free skeletons") {
        for (int n = 2; n <= 6; ++n)
            for (const auto& g : nonisomorphic_connected_graphs(n)) {
                if (!is_triangle_free(g)) continue;
                const CensusRecord r = census(g);
                const auto cover = vertex_cover_from_max_immorality_dag(max_immorality_dag(r),
                                                                        immorality_number(r));
                CHECK(covers_all_edges(g, cover.nodes));
                CHECK(cover.size() == minimum_vertex_cover_size(g));
            }
    }
}

TEST_CASE("decomposition JSON") {
    const Skeleton c4 = make_cycle(4);
    const auto s = decomposition_from_cover(c4, {c4, 0b0101}, {0, 2});
    const auto j = decomposition_to_json(s);
    CHECK(j["centers"] == nlohmann::ordered_json({0, 2}));
    CHECK(j["stars"][0]["center"] == 0);
    CHECK(j["stars"][0]["leaves"] == nlohmann::ordered_json({1, 3}));
}
