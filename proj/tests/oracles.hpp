// Test-only brute-force oracles. These deliberately avoid the library's
// refined search paths: isomorphism by full permutation scan, planarity by
// exhaustive Kuratowski-subdivision search, minor containment by closing the
// one-step relation, generation counts by labeled enumeration.
#ifndef CHIRALITY_TEST_ORACLES_HPP
#define CHIRALITY_TEST_ORACLES_HPP

#include <numeric>
#include <random>
#include <set>

#include "chirality/canonical.hpp"
#include "chirality/minor_search.hpp"
#include "chirality/multigraph.hpp"

namespace chirality::oracles {

inline bool naive_is_isomorphic(const Multigraph& g, const Multigraph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (Permutation(perm).apply(g) == h) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g.order() == 0;
}

inline uint64_t naive_automorphism_count(const Multigraph& g) {
    if (g.order() == 0) return 1;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t count = 0;
    do {
        if (Permutation(perm).apply(g) == g) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace detail {

// All simple paths from src to dst avoiding `blocked` internally; calls sink
// with the internal vertex set, stopping early when sink returns true.
inline bool paths_dfs(const std::vector<std::vector<int>>& adj, int cur, int dst,
                      std::vector<char>& blocked, std::vector<int>& internal,
                      const std::function<bool(const std::vector<int>&)>& sink) {
    if (cur == dst) return sink(internal);
    for (int w : adj[cur]) {
        if (w == dst) {
            if (paths_dfs(adj, w, dst, blocked, internal, sink)) return true;
            continue;
        }
        if (blocked[w]) continue;
        blocked[w] = 1;
        internal.push_back(w);
        if (paths_dfs(adj, w, dst, blocked, internal, sink)) return true;
        internal.pop_back();
        blocked[w] = 0;
    }
    return false;
}

// Internally disjoint paths realizing each required pair over the branch map.
inline bool realize_subdivision(const std::vector<std::vector<int>>& adj,
                                const std::vector<std::pair<int, int>>& pairs, size_t idx,
                                std::vector<char>& blocked) {
    if (idx == pairs.size()) return true;
    auto [a, b] = pairs[idx];
    std::vector<int> internal;
    return paths_dfs(adj, a, b, blocked, internal,
                     [&](const std::vector<int>& used) {
                         if (realize_subdivision(adj, pairs, idx + 1, blocked)) return true;
                         return false;
                     });
}

}  // namespace detail

// Exhaustive search for a K5 or K33 subdivision.
inline bool naive_nonplanar(const Multigraph& gm) {
    Multigraph g = gm.simplify();
    const int n = g.order();
    if (g.size() < 9) return false;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());

    auto try_branches = [&](const std::vector<int>& branch,
                            const std::vector<std::pair<int, int>>& index_pairs) {
        std::vector<char> blocked(n, 0);
        for (int b : branch) blocked[b] = 1;
        std::vector<std::pair<int, int>> pairs;
        for (auto [i, j] : index_pairs) pairs.emplace_back(branch[i], branch[j]);
        return detail::realize_subdivision(adj, pairs, 0, blocked);
    };

    // K5: all 5-subsets of vertices with degree >= 4
    {
        std::vector<int> cand;
        for (int v = 0; v < n; ++v)
            if (deg[v] >= 4) cand.push_back(v);
        std::vector<std::pair<int, int>> k5_pairs;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) k5_pairs.emplace_back(i, j);
        const int c = static_cast<int>(cand.size());
        std::vector<int> pick;
        std::function<bool(int)> choose = [&](int from) -> bool {
            if (pick.size() == 5) {
                std::vector<int> branch;
                for (int i : pick) branch.push_back(cand[i]);
                return try_branches(branch, k5_pairs);
            }
            for (int i = from; i < c; ++i) {
                pick.push_back(i);
                if (choose(i + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (choose(0)) return true;
    }
    // K33: all 6-subsets of degree >= 3 vertices, split 3|3
    {
        std::vector<int> cand;
        for (int v = 0; v < n; ++v)
            if (deg[v] >= 3) cand.push_back(v);
        const int c = static_cast<int>(cand.size());
        std::vector<int> pick;
        std::function<bool(int)> choose = [&](int from) -> bool {
            if (pick.size() == 6) {
                // split: fix cand[pick[0]] in side A, choose 2 of remaining 5
                for (int x = 1; x < 6; ++x)
                    for (int y = x + 1; y < 6; ++y) {
                        std::vector<int> a{cand[pick[0]], cand[pick[x]], cand[pick[y]]}, b;
                        for (int t = 1; t < 6; ++t)
                            if (t != x && t != y) b.push_back(cand[pick[t]]);
                        std::vector<int> branch = a;
                        branch.insert(branch.end(), b.begin(), b.end());
                        std::vector<std::pair<int, int>> pairs;
                        for (int i = 0; i < 3; ++i)
                            for (int j = 3; j < 6; ++j) pairs.emplace_back(i, j);
                        if (try_branches(branch, pairs)) return true;
                    }
                return false;
            }
            for (int i = from; i < c; ++i) {
                pick.push_back(i);
                if (choose(i + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (choose(0)) return true;
    }
    return false;
}

// Minor containment by closing the one-step relation with key dedup.
inline bool naive_has_minor(const Multigraph& g, const Multigraph& target) {
    CanonicalKey want = canonical_key(target);
    std::set<CanonicalKey> visited;
    std::vector<Multigraph> frontier{g};
    visited.insert(canonical_key(g));
    auto matches = [&](const Multigraph& h) {
        Multigraph s = h;
        while (!s.isolated_vertices().empty()) s = delete_vertex(s, s.isolated_vertices().back());
        return canonical_key(s) == want;
    };
    if (matches(g)) return true;
    while (!frontier.empty()) {
        Multigraph cur = std::move(frontier.back());
        frontier.pop_back();
        for (auto& [model, child] : enumerate_one_step_minors(cur)) {
            if (child.size() < target.size()) continue;
            if (!visited.insert(canonical_key(child)).second) continue;
            if (matches(child)) return true;
            frontier.push_back(child);
        }
    }
    return false;
}

// Isomorphism class count of n-vertex e-edge simple graphs by labeled
// enumeration plus canonical dedup. connected_only filters afterwards.
inline uint64_t labeled_class_count(int n, int e, bool connected_only) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const int s = static_cast<int>(slots.size());
    std::set<CanonicalKey> classes;
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pick.size()) == e) {
            std::vector<Edge> es;
            for (int i : pick) es.push_back(slots[i]);
            Multigraph g(n, es);
            if (connected_only && !is_connected(g)) return;
            classes.insert(canonical_key(g));
            return;
        }
        if (s - from < e - static_cast<int>(pick.size())) return;
        for (int i = from; i < s; ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return classes.size();
}

inline Multigraph random_multigraph(std::mt19937& rng, int max_n = 9, int max_m = 12,
                                    bool allow_loops = true) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, max_m);
    int m = md(rng);
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i) {
        int u = vd(rng), v = vd(rng);
        if (!allow_loops && u == v) continue;
        es.emplace_back(u, v);
    }
    return Multigraph(n, es);
}

inline Multigraph random_simple_connected(std::mt19937& rng, int n, int m) {
    for (;;) {
        std::vector<Edge> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        std::shuffle(slots.begin(), slots.end(), rng);
        if (static_cast<int>(slots.size()) < m) throw std::invalid_argument("too many edges");
        std::vector<Edge> es(slots.begin(), slots.begin() + m);
        Multigraph g(n, es);
        if (is_connected(g)) return g;
    }
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace chirality::oracles

#endif
