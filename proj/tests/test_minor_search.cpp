#include <catch2/catch_amalgamated.hpp>

#include "chirality/catalog.hpp"
#include "chirality/minor_search.hpp"
#include "chirality/pipeline.hpp"
#include "chirality/planarity.hpp"
#include "oracles.hpp"

using namespace chirality;

TEST_CASE("one-step minors of the triangle") {
    auto minors = enumerate_one_step_minors(cycle_graph(3));
    REQUIRE(minors.size() == 2);
    bool saw_path = false, saw_double = false;
    for (auto& [model, h] : minors) {
        if (is_isomorphic(h, path_graph(3))) saw_path = true;
        if (h.order() == 2 && h.multiplicity(0, 1) == 2) saw_double = true;
        REQUIRE(canonical_key(replay(cycle_graph(3), model)) == model.target_key);
    }
    REQUIRE(saw_path);
    REQUIRE(saw_double);
}

TEST_CASE("one-step minors of K33 collapse to two classes") {
    REQUIRE(enumerate_one_step_minors(complete_bipartite(3, 3)).size() == 2);
}

TEST_CASE("one-step minors of a single edge") {
    Multigraph k2 = path_graph(2);
    auto minors = enumerate_one_step_minors(k2);
    REQUIRE(minors.size() == 2);
}

TEST_CASE("has_minor finds K5 in K6") {
    auto model = has_minor(complete_graph(6), complete_graph(5));
    REQUIRE(model.has_value());
    REQUIRE(canonical_key(replay(complete_graph(6), *model)) ==
            canonical_key(complete_graph(5)));
}

TEST_CASE("has_minor finds K33 in 12_7_2 via two deletions and one contraction") {
    auto model = has_minor(graph_12_7_2(), complete_bipartite(3, 3));
    REQUIRE(model.has_value());
    int dels = 0, cons = 0;
    for (const MinorStep& s : model->steps) {
        if (s.kind == MinorStep::Kind::DeleteEdge) ++dels;
        if (s.kind == MinorStep::Kind::ContractEdge) ++cons;
    }
    REQUIRE(dels == 2);
    REQUIRE(cons == 1);
}

TEST_CASE("planar grids have no Kuratowski minors") {
    std::vector<Edge> grid;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            // desk-scale guard on canonical form is 16 vertices, fine here
            if (c + 1 < 4) grid.emplace_back(4 * r + c, 4 * r + c + 1);
            if (r + 1 < 4) grid.emplace_back(4 * r + c, 4 * (r + 1) + c);
        }
    Multigraph g(16, grid);
    REQUIRE(!has_minor(g, complete_graph(5)).has_value());
}

TEST_CASE("has_minor agrees with the one-step-closure oracle") {
    std::mt19937 rng(8401);
    const Multigraph k5 = complete_graph(5);
    const Multigraph k33 = complete_bipartite(3, 3);
    for (int i = 0; i < 120; ++i) {
        std::uniform_int_distribution<int> nd(5, 7);
        int n = nd(rng);
        std::uniform_int_distribution<int> md(8, std::min(10, n * (n - 1) / 2));
        Multigraph g = oracles::random_simple_connected(rng, n, md(rng));
        REQUIRE(has_minor(g, k5).has_value() == oracles::naive_has_minor(g, k5));
        REQUIRE(has_minor(g, k33).has_value() == oracles::naive_has_minor(g, k33));
    }
}

TEST_CASE("Kuratowski minors characterize non-planarity") {
    const Multigraph k5 = complete_graph(5);
    const Multigraph k33 = complete_bipartite(3, 3);
    for (int n = 5; n <= 7; ++n)
        for (int m = 8; m <= std::min(11, n * (n - 1) / 2); ++m) {
            GenerationSpec spec;
            spec.vertices = n;
            spec.edges = m;
            spec.connected = true;
            spec.simple = true;
            for (const Multigraph& g : generate(spec, default_threads())) {
                bool kuratowski =
                    has_minor(g, k5).has_value() || has_minor(g, k33).has_value();
                REQUIRE(kuratowski == !is_planar_bool(g));
            }
        }
    std::mt19937 rng(8402);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<int> nd(8, 9);
        int n = nd(rng);
        std::uniform_int_distribution<int> md(9, 13);
        Multigraph g = oracles::random_simple_connected(rng, n, md(rng));
        bool kuratowski = has_minor(g, k5).has_value() || has_minor(g, k33).has_value();
        REQUIRE(kuratowski == !is_planar_bool(g));
    }
}

TEST_CASE("prune_and_smooth") {
    // paths vanish
    REQUIRE(prune_and_smooth(path_graph(5)).core.order() == 0);
    // a cycle with a pendant shrinks to the smallest multigraph cycle the
    // stopping rule allows: a double edge
    {
        Multigraph g(7, [] {
            std::vector<Edge> es;
            for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
            es.emplace_back(0, 6);
            return es;
        }());
        SmoothResult sm = prune_and_smooth(g);
        REQUIRE(sm.core.order() == 2);
        REQUIRE(sm.core.size() == 2);
        REQUIRE(sm.core.multiplicity(0, 1) == 2);
    }
    // loops survive
    {
        Multigraph g = Multigraph::from_pairs(1, {{0, 0}});
        SmoothResult sm = prune_and_smooth(g);
        REQUIRE(sm.core.size() == 1);
        REQUIRE(sm.core.multiplicity(0, 0) == 1);
    }
    // 12_9_1: prune the pendants, smooth v, land on the three-rung ladder
    SmoothResult sm = prune_and_smooth(graph_12_9_1());
    REQUIRE(is_isomorphic(sm.core, moebius_ladder(3)));
    // idempotent
    SmoothResult again = prune_and_smooth(sm.core);
    REQUIRE(again.core == sm.core);
}

TEST_CASE("prune_and_smooth is automorphism equivariant on the catalog") {
    for (const NamedGraph& e : catalog()) {
        CanonicalKey core_key = canonical_key(prune_and_smooth(e.graph).core);
        for (const Permutation& s : automorphism_group(e.graph).all)
            REQUIRE(canonical_key(prune_and_smooth(s.apply(e.graph)).core) == core_key);
    }
}

TEST_CASE("smoothing mapping pulls core edges back to arc paths") {
    Multigraph g = graph_11_8_1();
    SmoothResult sm = prune_and_smooth(g);
    REQUIRE(is_isomorphic(sm.core, complete_bipartite(3, 3)));
    size_t total = 0;
    for (const auto& path : sm.core_edge_paths) total += path.size();
    REQUIRE(total == static_cast<size_t>(g.size()));  // nothing pruned here
}

TEST_CASE("moebius cores of 12_7_2") {
    auto cores = find_moebius_cores(graph_12_7_2(), 2);
    REQUIRE(!cores.empty());
    bool stated = false;
    std::vector<Edge> want_d{Edge(0, 4), Edge(1, 3)};
    std::vector<Edge> want_c{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(5, 0)};
    std::sort(want_d.begin(), want_d.end());
    std::sort(want_c.begin(), want_c.end());
    for (MoebiusCore& mc : cores) {
        REQUIRE(mc.n % 2 == 1);
        REQUIRE(is_isomorphic(mc.core, moebius_ladder(mc.n)));
        std::vector<Edge> d = mc.deletions;
        std::sort(d.begin(), d.end());
        if (d == want_d && mc.loop_cycle == want_c) stated = true;
    }
    REQUIRE(stated);
}

TEST_CASE("moebius cores of K33 with no deletions") {
    auto cores = find_moebius_cores(complete_bipartite(3, 3), 0);
    REQUIRE(cores.size() == 6);  // every hamiltonian cycle of K33 is a loop
    for (MoebiusCore& mc : cores) REQUIRE(mc.n == 3);
}

TEST_CASE("planar wheels have no moebius cores") {
    std::vector<Edge> wheel;
    for (int i = 0; i < 6; ++i) {
        wheel.emplace_back(i, (i + 1) % 6);
        wheel.emplace_back(i, 6);
    }
    REQUIRE(find_moebius_cores(Multigraph(7, wheel), 2).empty());
    REQUIRE_THROWS_AS(find_moebius_cores(path_graph(3), 99), std::invalid_argument);
}

TEST_CASE("H1 and H2 recognition") {
    Multigraph k33 = complete_bipartite(3, 3);
    for (int v = 0; v < 6; ++v) {
        std::vector<Edge> es = k33.edges();
        es.emplace_back(v, 6);
        REQUIRE(recognize_H1_H2(Multigraph(7, es)) == std::string("H1"));
    }
    REQUIRE(recognize_H1_H2(graph_H2()) == std::string("H2"));
    REQUIRE(!recognize_H1_H2(k33).has_value());
}

TEST_CASE("11_8_1 containment") {
    const Multigraph target = graph_11_8_1();
    REQUIRE(contains_11_8_1(target).has_value());  // identity model
    REQUIRE(!contains_11_8_1(graph_12_7_2()).has_value());
    REQUIRE(!contains_11_8_1(graph_12_8_1()).has_value());
    REQUIRE(!contains_11_8_1(graph_12_8_2()).has_value());
    REQUIRE(!contains_11_8_1(graph_12_9_1()).has_value());
    REQUIRE(!contains_11_8_1(graph_12_7_1()).has_value());
    // the order-8 case-analysis instance with the chord at the pendant vertex
    Multigraph inst = Multigraph::from_pairs(8, {{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3},
                                                 {2, 4}, {2, 5}, {1, 7}, {7, 3}, {0, 6}, {4, 6}});
    auto model = contains_11_8_1(inst);
    REQUIRE(model.has_value());
    REQUIRE(canonical_key(replay(inst, *model)) == canonical_key(target));
}

TEST_CASE("replay validates its inputs") {
    MinorModel bogus;
    bogus.source_key = canonical_key(cycle_graph(3));
    bogus.target_key = canonical_key(cycle_graph(3));
    bogus.steps.push_back(MinorStep::del_edge(Edge(0, 1)));
    REQUIRE_THROWS_AS(replay(cycle_graph(3), bogus), std::invalid_argument);
    REQUIRE_THROWS_AS(replay(path_graph(4), bogus), std::invalid_argument);
}
