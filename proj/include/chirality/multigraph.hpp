#ifndef CHIRALITY_MULTIGRAPH_HPP
#define CHIRALITY_MULTIGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chirality {

// Undirected edge with normalized endpoints (u <= v). u == v is a loop.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool is_loop() const { return u == v; }
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool operator<(const Edge& o) const { return u < o.u || (u == o.u && v < o.v); }
};

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// allowed; the edge multiset is kept sorted so structurally equal graphs
// compare equal. Values are immutable by convention: every operation below
// returns a new graph.
class Multigraph {
public:
    Multigraph() = default;

    explicit Multigraph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (const Edge& e : edges_)
            if (e.u < 0 || e.v >= n_)
                throw std::invalid_argument("edge endpoint out of range");
        std::sort(edges_.begin(), edges_.end());
    }

    static Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<Edge> es;
        es.reserve(pairs.size());
        for (auto [a, b] : pairs) es.emplace_back(a, b);
        return Multigraph(n, std::move(es));
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Multigraph& o) const { return !(*this == o); }

    // Multiplicity of the u-v edge class (loop when u == v).
    int multiplicity(int u, int v) const {
        Edge e(u, v);
        auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
        return static_cast<int>(hi - lo);
    }

    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

    // Loops contribute 2 to the degree of their vertex.
    int degree(int v) const {
        int d = 0;
        for (const Edge& e : edges_) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;
        }
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const Edge& e : edges_) {
            d[e.u]++;
            d[e.v]++;
        }
        return d;
    }

    // Distinct neighbors of v, excluding v itself.
    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (const Edge& e : edges_) {
            if (e.u == v && e.v != v) out.push_back(e.v);
            else if (e.v == v && e.u != v) out.push_back(e.u);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool is_simple() const {
        for (size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].is_loop()) return false;
            if (i + 1 < edges_.size() && edges_[i] == edges_[i + 1]) return false;
        }
        return true;
    }

    // Loops dropped, parallel classes collapsed to single edges.
    Multigraph simplify() const {
        std::vector<Edge> es;
        for (const Edge& e : edges_)
            if (!e.is_loop() && (es.empty() || es.back() != e)) es.push_back(e);
        return Multigraph(n_, std::move(es));
    }

    Multigraph add_edge(int u, int v) const {
        std::vector<Edge> es = edges_;
        es.emplace_back(u, v);
        return Multigraph(n_, std::move(es));
    }

    std::vector<int> isolated_vertices() const {
        std::vector<int> deg = degrees();
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (deg[v] == 0) out.push_back(v);
        return out;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted, multiplicity by repetition
};

// A bijection on 0..n-1, acting on vertices and (through them) on edges.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {
        std::vector<char> seen(img.size(), 0);
        for (int x : img) {
            if (x < 0 || x >= static_cast<int>(img.size()) || seen[x])
                throw std::invalid_argument("not a bijection");
            seen[x] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int v) const { return img[v]; }
    Edge operator()(const Edge& e) const { return Edge(img[e.u], img[e.v]); }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    // (a.compose(b))(x) = a(b(x))
    Permutation compose(const Permutation& b) const {
        std::vector<int> v(img.size());
        for (size_t i = 0; i < img.size(); ++i) v[i] = img[b.img[i]];
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(img.size());
        for (size_t i = 0; i < img.size(); ++i) v[img[i]] = static_cast<int>(i);
        return Permutation(std::move(v));
    }

    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }

    Multigraph apply(const Multigraph& g) const {
        std::vector<Edge> es;
        es.reserve(g.edges().size());
        for (const Edge& e : g.edges()) es.push_back((*this)(e));
        return Multigraph(g.order(), std::move(es));
    }
};

// --- minor operations ---------------------------------------------------

// Remove one copy of e. Vertex set unchanged.
inline Multigraph delete_edge(const Multigraph& g, const Edge& e) {
    std::vector<Edge> es = g.edges();
    auto it = std::find(es.begin(), es.end(), e);
    if (it == es.end()) throw std::invalid_argument("edge not in graph");
    es.erase(it);
    return Multigraph(g.order(), std::move(es));
}

// Remove v and its incident edges (loops included). Survivors are renumbered
// densely, preserving their relative order.
inline Multigraph delete_vertex(const Multigraph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        es.emplace_back(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
    }
    return Multigraph(g.order() - 1, std::move(es));
}

// Contract one copy of e: endpoints merge into min(u,v), the contracted copy
// disappears, any other u-v copy becomes a loop, parallel edges elsewhere are
// retained. Order drops by 1, size by 1.
inline Multigraph contract_edge(const Multigraph& g, const Edge& e) {
    if (e.is_loop()) throw std::invalid_argument("cannot contract a loop");
    std::vector<Edge> es = g.edges();
    auto it = std::find(es.begin(), es.end(), e);
    if (it == es.end()) throw std::invalid_argument("edge not in graph");
    es.erase(it);
    const int keep = e.u, gone = e.v;
    std::vector<Edge> merged;
    merged.reserve(es.size());
    for (const Edge& f : es) {
        int a = f.u == gone ? keep : f.u;
        int b = f.v == gone ? keep : f.v;
        merged.emplace_back(a, b);
    }
    Multigraph h(g.order(), std::move(merged));
    return delete_vertex(h, gone);
}

// Descending; loops count twice.
inline std::vector<int> degree_sequence(const Multigraph& g) {
    std::vector<int> d = g.degrees();
    std::sort(d.rbegin(), d.rend());
    return d;
}

inline bool is_connected(const Multigraph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

// True iff v and v' have the same neighborhoods in G minus {v, v'}.
// Stated for simple graphs only.
inline bool twin_pair(const Multigraph& g, int v, int vp) {
    if (!g.is_simple()) throw std::invalid_argument("twin_pair requires a simple graph");
    if (v == vp || v < 0 || vp < 0 || v >= g.order() || vp >= g.order())
        throw std::invalid_argument("twin_pair requires two distinct vertices");
    auto strip = [&](std::vector<int> nb) {
        nb.erase(std::remove_if(nb.begin(), nb.end(), [&](int x) { return x == v || x == vp; }),
                 nb.end());
        return nb;
    };
    return strip(g.neighbors(v)) == strip(g.neighbors(vp));
}

}  // namespace chirality

#endif
