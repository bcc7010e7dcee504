#ifndef CHIRALITY_CATALOG_BASIC_HPP
#define CHIRALITY_CATALOG_BASIC_HPP

#include "chirality/multigraph.hpp"

namespace chirality {

inline Multigraph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Multigraph(n, std::move(es));
}

// Parts {0..a-1} and {a..a+b-1}.
inline Multigraph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j) es.emplace_back(i, j);
    return Multigraph(a + b, std::move(es));
}

inline Multigraph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Multigraph(n, std::move(es));
}

inline Multigraph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Multigraph(n, std::move(es));
}

// Moebius ladder M_n: polygon of length 2n (the loop) plus the n chords
// joining opposite pairs (the rungs). M_3 is isomorphic to K33.
inline Multigraph moebius_ladder(int n) {
    if (n < 3) throw std::invalid_argument("moebius_ladder requires n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < 2 * n; ++i) es.emplace_back(i, (i + 1) % (2 * n));
    for (int i = 0; i < n; ++i) es.emplace_back(i, i + n);
    return Multigraph(2 * n, std::move(es));
}

}  // namespace chirality

#endif
