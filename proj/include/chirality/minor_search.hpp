#ifndef CHIRALITY_MINOR_SEARCH_HPP
#define CHIRALITY_MINOR_SEARCH_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "chirality/canonical.hpp"
#include "chirality/catalog.hpp"
#include "chirality/multigraph.hpp"

namespace chirality {

// --- minor models -----------------------------------------------------------

struct MinorStep {
    enum class Kind { DeleteEdge, ContractEdge, DeleteVertex };
    Kind kind;
    int u = 0;
    int v = 0;  // unused for DeleteVertex

    static MinorStep del_edge(const Edge& e) { return {Kind::DeleteEdge, e.u, e.v}; }
    static MinorStep con_edge(const Edge& e) { return {Kind::ContractEdge, e.u, e.v}; }
    static MinorStep del_vertex(int v) { return {Kind::DeleteVertex, v, -1}; }
};

// A replayable witness that target <= source. Vertex ids in each step refer to
// the graph at that point of the replay (vertex renumbering after removals is
// order-preserving, so the sequence is deterministic).
struct MinorModel {
    CanonicalKey source_key;
    CanonicalKey target_key;
    std::vector<MinorStep> steps;
};

inline Multigraph apply_step(const Multigraph& g, const MinorStep& s) {
    switch (s.kind) {
        case MinorStep::Kind::DeleteEdge: return delete_edge(g, Edge(s.u, s.v));
        case MinorStep::Kind::ContractEdge: return contract_edge(g, Edge(s.u, s.v));
        case MinorStep::Kind::DeleteVertex: return delete_vertex(g, s.u);
    }
    throw std::logic_error("bad step kind");
}

inline Multigraph replay(const Multigraph& source, const MinorModel& model) {
    if (canonical_key(source) != model.source_key)
        throw std::invalid_argument("replay: source graph does not match model");
    Multigraph cur = source;
    for (const MinorStep& s : model.steps) cur = apply_step(cur, s);
    if (canonical_key(cur) != model.target_key)
        throw std::invalid_argument("replay: result does not match target key");
    return cur;
}

// --- one-step minors ---------------------------------------------------------

// All single deletions, single contractions and isolated-vertex deletions,
// one representative per isomorphism class.
inline std::vector<std::pair<MinorModel, Multigraph>> enumerate_one_step_minors(
    const Multigraph& g) {
    std::vector<std::pair<MinorModel, Multigraph>> out;
    std::set<CanonicalKey> seen;
    CanonicalKey src = canonical_key(g);
    auto offer = [&](MinorStep step, Multigraph h) {
        CanonicalKey k = canonical_key(h);
        if (!seen.insert(k).second) return;
        out.push_back({MinorModel{src, k, {step}}, std::move(h)});
    };
    const std::vector<Edge>& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        if (i > 0 && es[i] == es[i - 1]) continue;  // one per edge class
        offer(MinorStep::del_edge(es[i]), delete_edge(g, es[i]));
    }
    for (size_t i = 0; i < es.size(); ++i) {
        if (es[i].is_loop()) continue;
        if (i > 0 && es[i] == es[i - 1]) continue;
        offer(MinorStep::con_edge(es[i]), contract_edge(g, es[i]));
    }
    for (int v : g.isolated_vertices()) {
        offer(MinorStep::del_vertex(v), delete_vertex(g, v));
        break;  // all isolated-vertex deletions are isomorphic
    }
    return out;
}

// --- minor containment -------------------------------------------------------

// Shared negative cache for repeated queries against the same target.
struct MinorSearchCache {
    std::unordered_map<CanonicalKey, char> failed;
};

namespace detail {

// Strips isolated vertices, appending the steps taken.
inline Multigraph strip_isolated(Multigraph g, std::vector<MinorStep>* steps) {
    for (;;) {
        std::vector<int> iso = g.isolated_vertices();
        if (iso.empty()) return g;
        // delete the highest index first so earlier ids stay valid
        int v = iso.back();
        if (steps) steps->push_back(MinorStep::del_vertex(v));
        g = delete_vertex(g, v);
    }
}

inline bool minor_dfs(const Multigraph& cur, const Multigraph& target,
                      const CanonicalKey& target_key, int budget,
                      std::vector<MinorStep>& steps, MinorSearchCache& cache) {
    if (cur.order() < target.order()) return false;
    if (budget == 0) {
        if (cur.order() != target.order()) return false;
        return canonical_key(cur) == target_key;
    }
    CanonicalKey k = canonical_key(cur);
    if (cache.failed.count(k)) return false;

    std::set<CanonicalKey> seen;
    const std::vector<Edge>& es = cur.edges();
    // deletions before contractions
    for (int phase = 0; phase < 2; ++phase) {
        for (size_t i = 0; i < es.size(); ++i) {
            if (i > 0 && es[i] == es[i - 1]) continue;
            if (phase == 1 && es[i].is_loop()) continue;
            MinorStep step = phase == 0 ? MinorStep::del_edge(es[i]) : MinorStep::con_edge(es[i]);
            Multigraph child = apply_step(cur, step);
            size_t mark = steps.size();
            steps.push_back(step);
            Multigraph stripped = strip_isolated(std::move(child), &steps);
            CanonicalKey ck = canonical_key(stripped);
            if (seen.insert(ck).second &&
                minor_dfs(stripped, target, target_key, budget - 1, steps, cache))
                return true;
            steps.resize(mark);
        }
    }
    cache.failed.emplace(std::move(k), 1);
    return false;
}

}  // namespace detail

// Exact containment test: a replayable model when target <= g, nothing
// otherwise. Every deletion or contraction removes exactly one edge, so the
// search depth is the edge surplus.
inline std::optional<MinorModel> has_minor(const Multigraph& g, const Multigraph& target,
                                           MinorSearchCache* cache = nullptr) {
    if (!target.isolated_vertices().empty())
        throw std::invalid_argument("has_minor targets may not have isolated vertices");
    int budget = g.size() - target.size();
    if (budget < 0 || g.order() < target.order()) return std::nullopt;
    MinorModel model;
    model.source_key = canonical_key(g);
    model.target_key = canonical_key(target);
    MinorSearchCache local;
    MinorSearchCache& c = cache ? *cache : local;
    Multigraph start = detail::strip_isolated(g, &model.steps);
    if (detail::minor_dfs(start, target, model.target_key, budget, model.steps, c))
        return model;
    return std::nullopt;
}

inline std::optional<MinorModel> has_minor(const Multigraph& g, const NamedGraph& target,
                                           MinorSearchCache* cache = nullptr) {
    return has_minor(g, target.graph, cache);
}

inline std::optional<MinorModel> contains_11_8_1(const Multigraph& g,
                                                 MinorSearchCache* cache = nullptr) {
    return has_minor(g, catalog_entry("11_8_1").graph, cache);
}

// --- pruning and smoothing ---------------------------------------------------

// Core of a multigraph after repeatedly deleting degree-0/1 vertices and
// suppressing degree-2 vertices whose two incident edges reach two distinct
// neighbors. Loops and 2-cycles are left intact, which makes the operation
// idempotent. core_edge_paths[i] lists the input edge indices whose union is
// the arc represented by core edge i.
struct SmoothResult {
    Multigraph core;
    std::vector<std::vector<int>> core_edge_paths;
    std::vector<int> core_vertex_of;  // input vertex -> core vertex, or -1
};

inline SmoothResult prune_and_smooth(const Multigraph& g) {
    struct Item {
        int u, v;
        std::vector<int> path;
    };
    std::vector<Item> items;
    for (int i = 0; i < g.size(); ++i)
        items.push_back({g.edges()[i].u, g.edges()[i].v, {i}});
    std::vector<char> active(g.order(), 1);

    auto degree_of = [&](int v) {
        int d = 0;
        for (const Item& it : items) {
            if (it.u == v) ++d;
            if (it.v == v) ++d;
        }
        return d;
    };

    for (bool changed = true; changed;) {
        changed = false;
        // prune
        for (int v = 0; v < g.order() && !changed; ++v) {
            if (!active[v]) continue;
            int d = degree_of(v);
            if (d <= 1) {
                items.erase(std::remove_if(items.begin(), items.end(),
                                           [&](const Item& it) { return it.u == v || it.v == v; }),
                            items.end());
                active[v] = 0;
                changed = true;
            }
        }
        if (changed) continue;
        // smooth
        for (int v = 0; v < g.order() && !changed; ++v) {
            if (!active[v] || degree_of(v) != 2) continue;
            int i1 = -1, i2 = -1;
            for (int i = 0; i < static_cast<int>(items.size()); ++i)
                if (items[i].u == v || items[i].v == v) (i1 < 0 ? i1 : i2) = i;
            if (i2 < 0) continue;  // a single loop at v
            int a = items[i1].u == v ? items[i1].v : items[i1].u;
            int b = items[i2].u == v ? items[i2].v : items[i2].u;
            if (a == b || a == v || b == v) continue;  // 2-cycle or loop, keep
            Item merged{std::min(a, b), std::max(a, b), items[i1].path};
            merged.path.insert(merged.path.end(), items[i2].path.begin(), items[i2].path.end());
            items.erase(items.begin() + i2);
            items.erase(items.begin() + i1);
            items.push_back(std::move(merged));
            active[v] = 0;
            changed = true;
        }
    }

    SmoothResult out;
    out.core_vertex_of.assign(g.order(), -1);
    int nv = 0;
    for (int v = 0; v < g.order(); ++v)
        if (active[v]) out.core_vertex_of[v] = nv++;
    std::vector<std::pair<Edge, std::vector<int>>> tagged;
    for (Item& it : items)
        tagged.push_back({Edge(out.core_vertex_of[it.u], out.core_vertex_of[it.v]),
                          std::move(it.path)});
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Edge> core_edges;
    for (auto& [e, path] : tagged) {
        core_edges.push_back(e);
        out.core_edge_paths.push_back(std::move(path));
    }
    out.core = Multigraph(nv, std::move(core_edges));
    return out;
}

// --- Moebius cores -----------------------------------------------------------

// One witness that deleting D from G leaves a subdivided Moebius ladder:
// the pruned/smoothed core is M_n (odd n), loop_cycle is a cycle of G minus D
// mapping onto the core cycle whose complement is the antipodal rung matching.
struct MoebiusCore {
    std::vector<Edge> deletions;
    Multigraph base;  // G minus D
    Multigraph core;
    int n = 0;
    std::vector<Edge> loop_cycle;               // edges of G
    std::vector<std::vector<Edge>> rung_paths;  // edges of G, one path per rung
};

namespace detail {

// Hamiltonian cycles of a small graph, as sorted edge-index sets.
inline std::vector<std::vector<int>> hamiltonian_cycles(const Multigraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> out;
    if (n < 3) return out;
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge idx)
    for (int i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        if (e.is_loop()) continue;
        adj[e.u].push_back({e.v, i});
        adj[e.v].push_back({e.u, i});
    }
    std::set<std::vector<int>> dedup;
    std::vector<int> path{0}, edges_used;
    std::vector<char> visited(n, 0);
    visited[0] = 1;

    std::function<void()> rec = [&]() {
        int v = path.back();
        if (static_cast<int>(path.size()) == n) {
            for (auto [w, idx] : adj[v])
                if (w == 0) {
                    std::vector<int> cyc = edges_used;
                    cyc.push_back(idx);
                    std::sort(cyc.begin(), cyc.end());
                    cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
                    if (static_cast<int>(cyc.size()) == n) dedup.insert(cyc);
                }
            return;
        }
        for (auto [w, idx] : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            edges_used.push_back(idx);
            rec();
            edges_used.pop_back();
            path.pop_back();
            visited[w] = 0;
        }
    };
    rec();
    out.assign(dedup.begin(), dedup.end());
    return out;
}

// Positions of vertices along a cycle given as edge indices.
inline std::vector<int> cycle_order(const Multigraph& g, const std::vector<int>& cycle_edges) {
    std::vector<std::vector<int>> nxt(g.order());
    for (int idx : cycle_edges) {
        const Edge& e = g.edges()[idx];
        nxt[e.u].push_back(e.v);
        nxt[e.v].push_back(e.u);
    }
    std::vector<int> order;
    int start = g.edges()[cycle_edges[0]].u;
    int prev = -1, cur = start;
    do {
        order.push_back(cur);
        int next = nxt[cur][0] == prev ? nxt[cur][1] : nxt[cur][0];
        prev = cur;
        cur = next;
    } while (cur != start);
    return order;
}

}  // namespace detail

inline std::vector<MoebiusCore> find_moebius_cores(const Multigraph& g, int max_deletions) {
    if (!g.is_simple() || !is_connected(g))
        throw std::invalid_argument("find_moebius_cores expects a simple connected graph");
    if (max_deletions > g.size())
        throw std::invalid_argument("max_deletions exceeds graph size");
    std::vector<MoebiusCore> out;
    const int m = g.size();

    std::vector<int> subset;
    std::function<void(int)> choose = [&](int from) {
        // evaluate this deletion set
        std::vector<Edge> del;
        std::vector<int> base_to_g;
        std::vector<Edge> base_edges;
        {
            std::vector<char> is_del(m, 0);
            for (int i : subset) is_del[i] = 1;
            for (int i = 0; i < m; ++i) {
                if (is_del[i]) del.push_back(g.edges()[i]);
                else {
                    base_to_g.push_back(i);
                    base_edges.push_back(g.edges()[i]);
                }
            }
        }
        Multigraph base(g.order(), base_edges);
        SmoothResult sm = prune_and_smooth(base);
        const Multigraph& core = sm.core;
        const int cn = core.order();
        bool shape_ok = cn >= 6 && cn % 2 == 0 && (cn / 2) % 2 == 1 && core.is_simple() &&
                        core.size() == 3 * (cn / 2);
        if (shape_ok)
            for (int d : core.degrees())
                if (d != 3) {
                    shape_ok = false;
                    break;
                }
        if (shape_ok) {
            int n = cn / 2;
            for (const std::vector<int>& cyc : detail::hamiltonian_cycles(core)) {
                // complement must be the antipodal matching of this cycle
                std::vector<int> pos(cn, -1);
                std::vector<int> order = detail::cycle_order(core, cyc);
                for (int i = 0; i < cn; ++i) pos[order[i]] = i;
                std::vector<char> in_cycle(core.size(), 0);
                for (int idx : cyc) in_cycle[idx] = 1;
                bool ok = true;
                std::vector<int> rung_idx;
                for (int i = 0; i < core.size(); ++i) {
                    if (in_cycle[i]) continue;
                    const Edge& e = core.edges()[i];
                    if ((pos[e.u] + n) % cn != pos[e.v] && (pos[e.v] + n) % cn != pos[e.u]) {
                        ok = false;
                        break;
                    }
                    rung_idx.push_back(i);
                }
                if (!ok) continue;
                MoebiusCore mc;
                mc.deletions = del;
                mc.base = base;
                mc.core = core;
                mc.n = n;
                for (int idx : cyc)
                    for (int be : sm.core_edge_paths[idx])
                        mc.loop_cycle.push_back(g.edges()[base_to_g[be]]);
                std::sort(mc.loop_cycle.begin(), mc.loop_cycle.end());
                for (int idx : rung_idx) {
                    std::vector<Edge> path;
                    for (int be : sm.core_edge_paths[idx]) path.push_back(g.edges()[base_to_g[be]]);
                    std::sort(path.begin(), path.end());
                    mc.rung_paths.push_back(std::move(path));
                }
                out.push_back(std::move(mc));
            }
        }
        // extend the subset
        if (static_cast<int>(subset.size()) < max_deletions)
            for (int i = from; i < m; ++i) {
                subset.push_back(i);
                choose(i + 1);
                subset.pop_back();
            }
    };
    choose(0);
    return out;
}

// Isomorphism test against the two graphs one contraction above K33.
inline std::optional<std::string> recognize_H1_H2(const Multigraph& g) {
    if (is_isomorphic(g, catalog_entry("H1").graph)) return std::string("H1");
    if (is_isomorphic(g, catalog_entry("H2").graph)) return std::string("H2");
    return std::nullopt;
}

}  // namespace chirality

#endif
