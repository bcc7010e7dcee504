#include <catch2/catch_amalgamated.hpp>

#include "chirality/catalog_validate.hpp"
#include "chirality/certificates.hpp"
#include "oracles.hpp"

using namespace chirality;

namespace {

// Brute-force side assignment for condition (3): tries all 2^orbits splits.
bool type1_exists_brute(const Multigraph& g, const Permutation& phi) {
    const int n = g.order();
    std::vector<std::pair<int, int>> orbits;
    std::vector<int> orbit_of(n, -1);
    std::vector<int> v1;
    for (int v = 0; v < n; ++v) {
        if (phi(v) == v) {
            v1.push_back(v);
        } else if (v < phi(v)) {
            orbit_of[v] = orbit_of[phi(v)] = static_cast<int>(orbits.size());
            orbits.emplace_back(v, phi(v));
        }
    }
    std::vector<int> v1_index(n, -1);
    for (size_t i = 0; i < v1.size(); ++i) v1_index[v1[i]] = static_cast<int>(i);
    std::vector<Edge> induced;
    for (const Edge& e : g.edges())
        if (v1_index[e.u] >= 0 && v1_index[e.v] >= 0)
            induced.emplace_back(v1_index[e.u], v1_index[e.v]);
    if (!is_planar_bool(Multigraph(static_cast<int>(v1.size()), induced))) return false;
    const size_t k = orbits.size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
        std::vector<int> side(n, 0);  // 1 = W2, 2 = W2'
        for (size_t o = 0; o < k; ++o) {
            auto [a, b] = orbits[o];
            side[a] = (mask >> o) & 1 ? 2 : 1;
            side[b] = (mask >> o) & 1 ? 1 : 2;
        }
        bool ok = true;
        for (const Edge& e : g.edges()) {
            if (side[e.u] == 0 || side[e.v] == 0) continue;
            if (side[e.u] != side[e.v] && phi(e.u) != e.v) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool type1_exists_brute_all(const Multigraph& g) {
    for (const Permutation& phi : brute_force_automorphisms(g)) {
        if (phi.is_identity() || !phi.compose(phi).is_identity()) continue;
        if (type1_exists_brute(g, phi)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("twin mirror certificates") {
    auto c = find_twin_mirror(complete_bipartite(3, 3));
    REQUIRE(c.has_value());
    REQUIRE(verify_twin_mirror(complete_bipartite(3, 3), *c));
    REQUIRE(!find_twin_mirror(complete_graph(7)).has_value());
    // K5: every pair is twins and the remainder is a triangle
    REQUIRE(find_twin_mirror(complete_graph(5)).has_value());
}

TEST_CASE("type-1: K6 has one, K7 has none") {
    auto c6 = find_type1(complete_graph(6));
    REQUIRE(c6.has_value());
    REQUIRE(c6->V1.size() == 4);
    REQUIRE(verify_type1(complete_graph(6), *c6));
    REQUIRE(!find_type1(complete_graph(7)).has_value());
    auto c33 = find_type1(complete_bipartite(3, 3));
    REQUIRE(c33.has_value());
    REQUIRE(verify_type1(complete_bipartite(3, 3), *c33));
}

TEST_CASE("type-1 side assignment is complete versus brute force") {
    // the parity propagation must find an assignment exactly when one exists,
    // for every order-2 automorphism
    std::vector<Multigraph> pool = {complete_graph(6), complete_graph(7),
                                    complete_bipartite(3, 3), graph_H1(), graph_H2(),
                                    graph_11_8_1(), graph_12_7_1(), moebius_ladder(4)};
    std::mt19937 rng(9501);
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<int> nd(4, 8);
        int n = nd(rng);
        std::uniform_int_distribution<int> md(n - 1, std::min(12, n * (n - 1) / 2));
        pool.push_back(oracles::random_simple_connected(rng, n, md(rng)));
    }
    for (const Multigraph& g : pool) {
        for (const Permutation& phi : automorphism_group(g).all) {
            if (phi.is_identity() || !phi.compose(phi).is_identity()) continue;
            REQUIRE(type1_for(g, phi).has_value() == type1_exists_brute(g, phi));
        }
        bool found = find_type1(g).has_value();
        REQUIRE(found == type1_exists_brute_all(g));
    }
}

TEST_CASE("added-edge mirror on K33 plus a part edge") {
    Multigraph gp = complete_bipartite(3, 3).add_edge(0, 1);
    // pairs (0,1) in one part are no longer twins in G' minus e, but e = 01
    // leaves K33 whose pairs qualify
    auto c = find_added_edge_mirror(gp);
    REQUIRE(c.has_value());
    REQUIRE(verify_added_edge_mirror(gp, *c));
}

TEST_CASE("added-edge mirror hypothesis failures are reported") {
    Multigraph gp = complete_bipartite(3, 3).add_edge(0, 1);
    AddedEdgeCheck chk = check_added_edge_mirror(gp, {0, 1}, {0, 2}, Edge(0, 1));
    REQUIRE(!chk.cert.has_value());
    REQUIRE(!chk.failure.empty());
    AddedEdgeCheck chk2 = check_added_edge_mirror(gp, {3, 4}, {0, 5}, Edge(0, 1));
    REQUIRE(!chk2.cert.has_value());
}

TEST_CASE("non-simple discharges") {
    // doubled triangle edge: planar
    Multigraph tri2 = Multigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
    auto c1 = nonsimple_achiral(tri2);
    REQUIRE(c1.has_value());
    REQUIRE(c1->variant == NonSimpleCertificate::Variant::Planar);
    REQUIRE(verify_nonsimple(tri2, *c1));

    // K33 with one edge doubled: removing the pair leaves K33 minus an edge,
    // which is planar
    Multigraph k33d = complete_bipartite(3, 3).add_edge(0, 3);
    auto c2 = nonsimple_achiral(k33d);
    REQUIRE(c2.has_value());
    REQUIRE(c2->variant == NonSimpleCertificate::Variant::DoubleEdgePlanar);
    REQUIRE(verify_nonsimple(k33d, *c2));

    // K33 with an extra double edge between two same-part vertices: removing
    // the pair leaves K33 itself
    Multigraph k33dd = complete_bipartite(3, 3).add_edge(0, 1).add_edge(0, 1);
    auto c3 = nonsimple_achiral(k33dd);
    REQUIRE(c3.has_value());
    REQUIRE(c3->variant == NonSimpleCertificate::Variant::DoubleEdgeOverK33);
    REQUIRE(verify_nonsimple(k33dd, *c3));

    // K33 plus a loop
    Multigraph k33l = complete_bipartite(3, 3).add_edge(2, 2);
    auto c4 = nonsimple_achiral(k33l);
    REQUIRE(c4.has_value());
    REQUIRE(c4->variant == NonSimpleCertificate::Variant::LoopOnK33);
    REQUIRE(verify_nonsimple(k33l, *c4));
    REQUIRE(c4->mirror_pair[0] != 2);
    REQUIRE(c4->mirror_pair[1] != 2);

    // no variant applies: K5 with a doubled edge stays non-planar after the
    // pair is removed and is not K33-shaped
    Multigraph k5d = complete_graph(5).add_edge(0, 1);
    REQUIRE(!nonsimple_achiral(k5d).has_value());
}

TEST_CASE("chirality certificates on the named graphs") {
    for (const std::string& name : mmic_names()) {
        const Multigraph& g = catalog_entry(name).graph;
        auto c = find_chirality_certificate(g);
        REQUIRE(c.has_value());
        REQUIRE(c->n == 3);
        REQUIRE(verify_chirality(g, *c));
        REQUIRE(c->automorphisms.size() == automorphism_group(g).order);
    }
}

TEST_CASE("K33 admits no chirality certificate") {
    REQUIRE(!find_chirality_certificate(complete_bipartite(3, 3)).has_value());
}

TEST_CASE("verify_chirality rejects corrupted certificates") {
    const Multigraph g = graph_12_7_2();
    auto c = find_chirality_certificate(g);
    REQUIRE(c.has_value());
    // wrong n
    ChiralityCertificate bad = *c;
    bad.n = 5;
    REQUIRE(!verify_chirality(g, bad));
    // missing automorphism
    bad = *c;
    bad.automorphisms.pop_back();
    REQUIRE(!verify_chirality(g, bad));
    // cycle that is not setwise invariant: swap in a chord
    bad = *c;
    bad.cycle[0] = Edge(0, 4);
    REQUIRE(!verify_chirality(g, bad));
}

TEST_CASE("classification of the catalog") {
    std::vector<std::string> achiral = {"K5", "K33", "M3", "H1", "H2"};
    for (const std::string& name : achiral) {
        Verdict v = classify_embeddability(catalog_entry(name).graph);
        REQUIRE(v.kind == Verdict::Kind::Achiral);
    }
    for (const std::string& name : mmic_names()) {
        Verdict v = classify_embeddability(catalog_entry(name).graph);
        REQUIRE(v.kind == Verdict::Kind::Chiral);
    }
    REQUIRE(classify_embeddability(complete_graph(4)).kind == Verdict::Kind::Achiral);
    REQUIRE(classify_embeddability(complete_graph(6)).kind == Verdict::Kind::Achiral);
    // K7 is out of reach of every implemented certificate
    REQUIRE(classify_embeddability(complete_graph(7)).kind == Verdict::Kind::Unresolved);
}

TEST_CASE("achirality certificates re-verify from independent primitives") {
    std::vector<std::string> names = {"K5", "K33", "M3", "H1", "H2"};
    for (const std::string& name : names) {
        const Multigraph& g = catalog_entry(name).graph;
        Verdict v = classify_embeddability(g);
        REQUIRE(v.achiral.has_value());
        if (const auto* t = std::get_if<TwinMirrorCertificate>(&*v.achiral))
            REQUIRE(verify_twin_mirror(g, *t));
        else if (const auto* t1 = std::get_if<TypeOneCertificate>(&*v.achiral))
            REQUIRE(verify_type1(g, *t1));
    }
}

TEST_CASE("catalog validation passes") {
    CatalogReport rep = validate_catalog();
    for (const CatalogCheck& c : rep.checks) {
        INFO(c.graph << ": " << c.check << " " << c.detail);
        REQUIRE(c.pass);
    }
}
