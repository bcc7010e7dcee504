#ifndef CHIRALITY_PLANARITY_HPP
#define CHIRALITY_PLANARITY_HPP

#include <optional>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "chirality/canonical.hpp"
#include "chirality/catalog_basic.hpp"
#include "chirality/multigraph.hpp"

namespace chirality {

// Verdict plus witness: a rotation system (per-vertex cyclic neighbor order on
// the simplification) when planar, a Kuratowski-type obstruction (edge subset
// of the original graph forming a K5 or K33 subdivision) when not.
struct PlanarityVerdict {
    bool planar = false;
    std::vector<std::vector<int>> rotation;  // planar witness
    std::vector<Edge> obstruction;           // non-planar witness, original edges
};

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Multigraph& simple) {
    BoostGraph bg(simple.order());
    int idx = 0;
    for (const Edge& e : simple.edges()) {
        auto be = boost::add_edge(e.u, e.v, bg).first;
        boost::put(boost::edge_index, bg, be, idx++);
    }
    return bg;
}

}  // namespace detail

// Fast boolean test. Loops and multiplicities never change the verdict, so it
// is decided on the simplification; any graph with fewer than 9 edges is
// planar outright (a Kuratowski subdivision needs at least 9).
inline bool is_planar_bool(const Multigraph& g) {
    Multigraph s = g.simplify();
    if (s.size() < 9) return true;
    detail::BoostGraph bg = detail::to_boost(s);
    return boost::boyer_myrvold_planarity_test(bg);
}

inline PlanarityVerdict is_planar(const Multigraph& g) {
    PlanarityVerdict out;
    Multigraph s = g.simplify();
    detail::BoostGraph bg = detail::to_boost(s);
    using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding(std::max(1, s.order()));
    std::vector<EdgeDesc> kur;
    out.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    if (out.planar) {
        out.rotation.resize(s.order());
        for (int v = 0; v < s.order(); ++v)
            for (EdgeDesc e : embedding[v]) {
                int a = static_cast<int>(boost::source(e, bg));
                int b = static_cast<int>(boost::target(e, bg));
                out.rotation[v].push_back(a == v ? b : a);
            }
    } else {
        for (EdgeDesc e : kur)
            out.obstruction.emplace_back(static_cast<int>(boost::source(e, bg)),
                                         static_cast<int>(boost::target(e, bg)));
        std::sort(out.obstruction.begin(), out.obstruction.end());
    }
    return out;
}

// Every connected graph with ||G|| - |G| <= 2 is planar. Returns a verdict in
// that case, nothing otherwise; the caller falls through to is_planar.
inline std::optional<PlanarityVerdict> lemma_pla_shortcut(const Multigraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("lemma_pla_shortcut requires a connected graph");
    if (g.size() - g.order() > 2) return std::nullopt;
    PlanarityVerdict v = is_planar(g);
    if (!v.planar) throw std::logic_error("size - order <= 2 but embedder found no embedding");
    return v;
}

// Checks that `edges` (a sub-multiset of g's edges) forms a subdivision of K5
// or K33: all inner vertices degree 2, suppression yields the Kuratowski graph.
inline bool verify_kuratowski_edges(const Multigraph& g, const std::vector<Edge>& edges) {
    if (edges.empty()) return false;
    for (const Edge& e : edges) {
        if (e.is_loop()) return false;
        if (!g.has_edge(e.u, e.v)) return false;
    }
    // suppress degree-2 vertices of the subgraph
    std::vector<Edge> cur = edges;
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> deg(g.order(), 0);
        for (const Edge& e : cur) {
            deg[e.u]++;
            deg[e.v]++;
        }
        for (int v = 0; v < g.order() && !changed; ++v) {
            if (deg[v] != 2) continue;
            int a = -1, b = -1;
            for (const Edge& e : cur) {
                if (e.u == v) (a < 0 ? a : b) = e.v;
                else if (e.v == v) (a < 0 ? a : b) = e.u;
            }
            if (a < 0 || b < 0 || a == b || a == v || b == v) continue;
            std::vector<Edge> next;
            for (const Edge& e : cur)
                if (e.u != v && e.v != v) next.push_back(e);
            next.emplace_back(a, b);
            cur = std::move(next);
            changed = true;
        }
    }
    // compact to the used vertices and compare
    std::vector<int> remap(g.order(), -1);
    int nv = 0;
    for (const Edge& e : cur) {
        if (remap[e.u] < 0) remap[e.u] = nv++;
        if (remap[e.v] < 0) remap[e.v] = nv++;
    }
    std::vector<Edge> compact;
    for (const Edge& e : cur) compact.emplace_back(remap[e.u], remap[e.v]);
    Multigraph core(nv, std::move(compact));
    return is_isomorphic(core, complete_graph(5)) ||
           is_isomorphic(core, complete_bipartite(3, 3));
}

// Obstruction as an edge subset, when the graph is non-planar.
inline std::optional<std::vector<Edge>> kuratowski_witness(const Multigraph& g) {
    PlanarityVerdict v = is_planar(g);
    if (v.planar) return std::nullopt;
    if (!verify_kuratowski_edges(g, v.obstruction))
        throw std::logic_error("embedder returned an invalid Kuratowski witness");
    return v.obstruction;
}

}  // namespace chirality

#endif
