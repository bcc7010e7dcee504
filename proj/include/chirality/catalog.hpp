#ifndef CHIRALITY_CATALOG_HPP
#define CHIRALITY_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "chirality/catalog_basic.hpp"
#include "chirality/multigraph.hpp"

namespace chirality {

struct NamedGraph {
    std::string name;
    Multigraph graph;
    std::string provenance;
};

// H1: K33 plus a pendant vertex. Contracting the pendant edge gives K33.
inline Multigraph graph_H1() {
    Multigraph g = complete_bipartite(3, 3);
    return Multigraph(7, [&] {
        std::vector<Edge> es = g.edges();
        es.emplace_back(0, 6);
        return es;
    }());
}

// H2: K33 with one edge subdivided. Contracting either half gives K33.
inline Multigraph graph_H2() {
    std::vector<Edge> es = complete_bipartite(3, 3).edges();
    es.erase(std::find(es.begin(), es.end(), Edge(0, 3)));
    es.emplace_back(0, 6);
    es.emplace_back(6, 3);
    return Multigraph(7, std::move(es));
}

// Vertex labels 0..6 = a1,a2,a3,b1,b2,b3,v. Six-cycle a1a2a3b1b2b3 plus rungs
// a2b2, a3b3, chords a1b2 and b1a2, and v joined to a1 and b1.
inline Multigraph graph_12_7_2() {
    return Multigraph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                      {1, 4}, {2, 5}, {0, 4}, {1, 3}, {6, 0}, {6, 3}});
}

// The other order-7 entry: H2 plus the two chords v2v7 and v5v7 (labels
// 0..6 = v1..v7). Equivalently H2 plus v2v7 and v4v5.
inline Multigraph graph_12_7_1() {
    std::vector<Edge> es = graph_H2().edges();
    es.emplace_back(1, 6);
    es.emplace_back(4, 6);
    return Multigraph(7, std::move(es));
}

// Labels 0..7 = a1,a2,a3,b1,b2,b3,v,w. Six-cycle plus rungs a2b2, a3b3, the
// rung a1b1 subdivided by v, a pendant w at a2, and the chord a1b2.
inline Multigraph graph_12_8_1() {
    return Multigraph::from_pairs(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                      {1, 4}, {2, 5}, {6, 0}, {6, 3}, {7, 1}, {0, 4}});
}

// Labels 0..7 = a1,a2,a3,b1,b2,b3,v,w, with edges read off the §3-style
// constraint text: b2 is the degree-4 vertex, w the degree-2 vertex.
inline Multigraph graph_12_8_2() {
    return Multigraph::from_pairs(8, {{3, 4}, {2, 3}, {1, 4}, {1, 2}, {0, 5}, {4, 5},
                                      {2, 5}, {3, 6}, {0, 6}, {1, 7}, {0, 7}, {4, 6}});
}

// Labels 0..8 = a1,a2,a3,b1,b2,b3,v,w1,w2. Six-cycle plus rungs a1b1, a3b3,
// the rung a2b2 subdivided by v, and pendants w1 at a1, w2 at b1.
inline Multigraph graph_12_9_1() {
    return Multigraph::from_pairs(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                      {0, 3}, {2, 5}, {6, 1}, {6, 4}, {7, 0}, {8, 3}});
}

// K33 with two disjoint edges subdivided (labels 0..5 the K33 vertices with
// parts {0,1,2} and {3,4,5}; 6 subdivides 0-3, 7 subdivides 1-4).
inline Multigraph graph_11_8_1() {
    std::vector<Edge> es = complete_bipartite(3, 3).edges();
    es.erase(std::find(es.begin(), es.end(), Edge(0, 3)));
    es.erase(std::find(es.begin(), es.end(), Edge(1, 4)));
    es.emplace_back(0, 6);
    es.emplace_back(6, 3);
    es.emplace_back(1, 7);
    es.emplace_back(7, 4);
    return Multigraph(8, std::move(es));
}

inline const std::vector<NamedGraph>& catalog() {
    static const std::vector<NamedGraph> entries = {
        {"K5", complete_graph(5), "complete graph on five vertices"},
        {"K33", complete_bipartite(3, 3), "complete bipartite 3x3"},
        {"M3", moebius_ladder(3), "Moebius ladder, three rungs"},
        {"M5", moebius_ladder(5), "Moebius ladder, five rungs"},
        {"H1", graph_H1(), "K33 plus a pendant vertex; one contraction from K33"},
        {"H2", graph_H2(), "K33 with one edge subdivided; one contraction from K33"},
        {"12_7_1", graph_12_7_1(), "order 7, size 12; H2 plus two chords at the subdivision vertex"},
        {"12_7_2", graph_12_7_2(), "order 7, size 12; subdivided Moebius ladder plus two chords"},
        {"12_8_1", graph_12_8_1(), "order 8, size 12; subdivided rung, pendant, chord"},
        {"12_8_2", graph_12_8_2(), "order 8, size 12; two subdivisions plus chord"},
        {"12_9_1", graph_12_9_1(), "order 9, size 12; subdivided rung plus two pendants"},
        {"11_8_1", graph_11_8_1(), "order 8, size 11; K33 with two disjoint edges subdivided"},
    };
    return entries;
}

inline const NamedGraph& catalog_entry(const std::string& name) {
    for (const NamedGraph& e : catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown catalog entry: " + name);
}

// The minor-minimal entries the engine must reproduce.
inline std::vector<std::string> mmic_names() {
    return {"12_7_1", "12_7_2", "12_8_1", "12_8_2", "12_9_1", "11_8_1"};
}

}  // namespace chirality

#endif
