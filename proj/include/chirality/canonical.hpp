#ifndef CHIRALITY_CANONICAL_HPP
#define CHIRALITY_CANONICAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chirality/multigraph.hpp"

namespace chirality {

// Byte string identifying the isomorphism class of a multigraph (loops and
// multiplicities included): key(G) == key(H)  <=>  G iso H.
using CanonicalKey = std::string;

constexpr int kMaxCanonVertices = 16;

namespace detail {

struct AdjMatrix {
    int n = 0;
    std::array<std::array<uint8_t, kMaxCanonVertices>, kMaxCanonVertices> m{};

    explicit AdjMatrix(const Multigraph& g) : n(g.order()) {
        if (n > kMaxCanonVertices) throw std::invalid_argument("graph too large for canonical form");
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) {
                if (m[e.u][e.u] == 255) throw std::invalid_argument("multiplicity overflow");
                m[e.u][e.u]++;
            } else {
                m[e.u][e.v]++;
                m[e.v][e.u]++;
            }
        }
    }
};

// Color refinement to fixpoint: signature of v is (color, loop count, sorted
// multiset of (neighbor color, multiplicity)).
inline void refine_colors(const AdjMatrix& a, std::vector<int>& color) {
    const int n = a.n;
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n), next(n);
    for (int round = 0; round <= n; ++round) {
        for (int v = 0; v < n; ++v) {
            sig[v].clear();
            sig[v].push_back(color[v]);
            sig[v].push_back(a.m[v][v]);
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; ++u)
                if (u != v && a.m[v][u]) nb.emplace_back(color[u], a.m[v][u]);
            std::sort(nb.begin(), nb.end());
            for (auto [c, mult] : nb) {
                sig[v].push_back(c);
                sig[v].push_back(mult);
            }
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        if (next == color) return;
        color = next;
    }
}

inline std::string encode_under(const AdjMatrix& a, const std::vector<int>& pos_of) {
    // pos_of[v] = canonical position of vertex v (a bijection onto 0..n-1)
    std::array<int, kMaxCanonVertices> at{};
    for (int v = 0; v < a.n; ++v) at[pos_of[v]] = v;
    std::string s;
    s.reserve(1 + a.n * (a.n + 1) / 2);
    s.push_back(static_cast<char>(a.n));
    for (int i = 0; i < a.n; ++i)
        for (int j = i; j < a.n; ++j)
            s.push_back(static_cast<char>(a.m[at[i]][at[j]]));
    return s;
}

// Individualize-and-refine canonical search. Sibling branches are pruned by
// automorphisms discovered at equal-encoding leaves, but only by those fixing
// the current node's coloring (a global-orbit prune would be unsound below
// the root).
class CanonSearch {
public:
    explicit CanonSearch(const Multigraph& g) : a_(g) {}

    void run() {
        std::vector<int> color(a_.n, 0);
        refine_colors(a_, color);
        descend(color);
    }

    const std::string& key() const { return best_; }
    const std::vector<int>& labeling() const { return best_pos_; }
    const std::vector<std::vector<int>>& found_automorphisms() const { return auts_; }

private:
    AdjMatrix a_;
    std::string best_;
    std::vector<int> best_pos_;
    std::vector<std::vector<int>> auts_;  // automorphisms from equal-key leaves

    void descend(const std::vector<int>& color) {
        const int n = a_.n;
        // smallest non-singleton cell
        int cell = -1;
        std::vector<int> members;
        {
            std::array<int, kMaxCanonVertices> count{};
            for (int v = 0; v < n; ++v) count[color[v]]++;
            for (int c = 0; c < n; ++c)
                if (count[c] >= 2) {
                    cell = c;
                    break;
                }
            if (cell >= 0)
                for (int v = 0; v < n; ++v)
                    if (color[v] == cell) members.push_back(v);
        }
        if (cell < 0) {
            // discrete coloring = labeling
            std::string enc = encode_under(a_, color);
            if (best_.empty() || enc < best_) {
                best_ = enc;
                best_pos_ = color;
            } else if (enc == best_) {
                std::array<int, kMaxCanonVertices> at_new{};
                for (int v = 0; v < n; ++v) at_new[color[v]] = v;
                std::vector<int> perm(n);
                for (int v = 0; v < n; ++v) perm[v] = at_new[best_pos_[v]];
                auts_.push_back(std::move(perm));
            }
            return;
        }

        size_t auts_seen = auts_.size();
        std::vector<int> orbit(n);
        std::iota(orbit.begin(), orbit.end(), 0);
        auto find = [&](int x) {
            while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
            return x;
        };
        auto absorb = [&](size_t from) {
            // fold in automorphisms that fix this node's coloring
            for (size_t i = from; i < auts_.size(); ++i) {
                const std::vector<int>& p = auts_[i];
                bool fixes = true;
                for (int v = 0; v < n && fixes; ++v) fixes = color[p[v]] == color[v];
                if (!fixes) continue;
                for (int v = 0; v < n; ++v) {
                    int ra = find(v), rb = find(p[v]);
                    if (ra != rb) orbit[ra] = rb;
                }
            }
            return auts_.size();
        };
        auts_seen = absorb(0);

        std::vector<char> branched_rep(n, 0);
        for (int v : members) {
            auts_seen = absorb(auts_seen);
            int rep = find(v);
            bool skip = false;
            for (int u : members) {
                if (u == v) break;
                if (branched_rep[u] && find(u) == rep) {
                    skip = true;
                    break;
                }
            }
            if (skip) continue;
            branched_rep[v] = 1;
            std::vector<int> next(color);
            for (int u = 0; u < n; ++u)
                if (next[u] >= cell) next[u]++;
            next[v] = cell;
            refine_colors(a_, next);
            descend(next);
        }
    }
};

inline void enumerate_automorphisms_rec(const AdjMatrix& a, const std::vector<int>& verts,
                                        const std::vector<int>& color, std::vector<int>& img,
                                        std::vector<char>& used, int depth,
                                        std::vector<Permutation>& out, uint64_t cap) {
    const int n = a.n;
    if (depth == n) {
        out.emplace_back(img);
        if (out.size() > cap) throw std::runtime_error("automorphism group too large");
        return;
    }
    int v = verts[depth];
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || color[cand] != color[v] || a.m[v][v] != a.m[cand][cand]) continue;
        bool ok = true;
        for (int i = 0; i < depth && ok; ++i) {
            int u = verts[i];
            ok = a.m[v][u] == a.m[cand][img[u]];
        }
        if (!ok) continue;
        img[v] = cand;
        used[cand] = 1;
        enumerate_automorphisms_rec(a, verts, color, img, used, depth + 1, out, cap);
        used[cand] = 0;
        img[v] = -1;
    }
}

}  // namespace detail

struct CanonicalForm {
    CanonicalKey key;
    Permutation to_canonical;  // v -> canonical position
};

inline CanonicalForm canonical_form(const Multigraph& g) {
    if (g.order() == 0) return {std::string(1, '\0'), Permutation()};
    detail::CanonSearch s(g);
    s.run();
    return {s.key(), Permutation(s.labeling())};
}

inline CanonicalKey canonical_key(const Multigraph& g) { return canonical_form(g).key; }

inline std::string key_to_hex(const CanonicalKey& k) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(k.size() * 2);
    for (unsigned char c : k) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

// Isomorphism test; on success returns a vertex map phi with phi(G) = H.
inline std::optional<Permutation> isomorphism(const Multigraph& g, const Multigraph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    CanonicalForm cg = canonical_form(g), ch = canonical_form(h);
    if (cg.key != ch.key) return std::nullopt;
    Permutation phi = ch.to_canonical.inverse().compose(cg.to_canonical);
    if (phi.apply(g) != h) throw std::logic_error("canonical witness failed verification");
    return phi;
}

inline bool is_isomorphic(const Multigraph& g, const Multigraph& h) {
    return isomorphism(g, h).has_value();
}

// Exact automorphism group, fully materialized. All graphs of interest have
// at most 13 vertices; the vertex bound guards against accidental blowups.
struct AutomorphismGroup {
    std::vector<Permutation> generators;
    std::vector<Permutation> all;
    uint64_t order = 0;
};

inline AutomorphismGroup automorphism_group(const Multigraph& g, int vertex_bound = 16,
                                            uint64_t element_cap = 2000000) {
    if (g.order() > vertex_bound)
        throw std::invalid_argument("automorphism_group: vertex bound exceeded");
    AutomorphismGroup grp;
    if (g.order() == 0) {
        grp.order = 1;
        grp.all = {Permutation()};
        return grp;
    }
    detail::AdjMatrix a(g);
    std::vector<int> color(a.n, 0);
    detail::refine_colors(a, color);
    std::vector<int> verts(a.n);
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int x, int y) {
        return color[x] < color[y] || (color[x] == color[y] && x < y);
    });
    std::vector<int> img(a.n, -1);
    std::vector<char> used(a.n, 0);
    detail::enumerate_automorphisms_rec(a, verts, color, img, used, 0, grp.all, element_cap);
    std::sort(grp.all.begin(), grp.all.end());
    grp.order = grp.all.size();

    // greedy generating set
    std::set<std::vector<int>> closure{Permutation::identity(g.order()).img};
    for (const Permutation& p : grp.all) {
        if (closure.size() == grp.all.size()) break;
        if (closure.count(p.img)) continue;
        grp.generators.push_back(p);
        std::vector<Permutation> frontier;
        for (const auto& q : closure) frontier.emplace_back(q);
        closure.clear();
        for (const Permutation& q : frontier) closure.insert(q.img);
        while (!frontier.empty()) {
            Permutation q = frontier.back();
            frontier.pop_back();
            for (const Permutation& gen : grp.generators) {
                Permutation r = gen.compose(q);
                if (closure.insert(r.img).second) frontier.push_back(r);
            }
        }
    }
    return grp;
}

}  // namespace chirality

#endif
