#ifndef CHIRALITY_PIPELINE_HPP
#define CHIRALITY_PIPELINE_HPP

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "chirality/catalog.hpp"
#include "chirality/certificates.hpp"
#include "chirality/minor_search.hpp"

namespace chirality {

// --- threading ----------------------------------------------------------------

inline int default_threads() {
    if (const char* env = std::getenv("CHIRALITY_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Static work distribution; results must be written by index so the outcome
// is independent of the worker count.
template <typename Fn>
inline void parallel_for(size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

// --- isomorph-free generation ---------------------------------------------------

struct GenerationSpec {
    int vertices = 0;
    int edges = 0;
    bool connected = true;
    bool simple = true;
    bool nonplanar = false;
};

namespace detail {

// Edge class at the lexicographically largest canonical position pair;
// well-defined up to the automorphism orbit, which is all the canonical
// parent test needs.
inline Edge canonical_last_edge(const Multigraph& g, const Permutation& to_canon) {
    Edge best(0, 0);
    std::pair<int, int> best_pos{-1, -1};
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (i > 0 && e == g.edges()[i - 1]) continue;
        int a = to_canon(e.u), b = to_canon(e.v);
        std::pair<int, int> p{std::min(a, b), std::max(a, b)};
        if (p > best_pos) {
            best_pos = p;
            best = e;
        }
    }
    return best;
}

inline std::vector<Edge> augmentation_slots(const Multigraph& g, bool simple) {
    std::vector<Edge> slots;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u; v < g.order(); ++v) {
            if (simple && (u == v || g.has_edge(u, v))) continue;
            slots.emplace_back(u, v);
        }
    return slots;
}

// Accepts a child exactly when the augmenting edge class matches the child's
// canonical deletion class, so each isomorphism class is produced from exactly
// one parent and once within it (children are key-deduplicated per parent).
template <typename Sink>
inline void generation_dfs(const Multigraph& g, const CanonicalKey& gkey, int target_edges,
                           bool simple, Sink&& sink) {
    if (g.size() == target_edges) {
        sink(g);
        return;
    }
    std::set<CanonicalKey> child_seen;
    for (const Edge& slot : augmentation_slots(g, simple)) {
        Multigraph x = g.add_edge(slot.u, slot.v);
        CanonicalForm cf = canonical_form(x);
        if (!child_seen.insert(cf.key).second) continue;
        Edge last = canonical_last_edge(x, cf.to_canonical);
        if (canonical_key(delete_edge(x, last)) != gkey) continue;
        generation_dfs(x, cf.key, target_edges, simple, sink);
    }
}

}  // namespace detail

// One canonical representative per isomorphism class, sorted by canonical key.
inline std::vector<Multigraph> generate(const GenerationSpec& spec, int threads = 1) {
    if (spec.vertices < 0 || spec.vertices > 10 || spec.edges < 0 || spec.edges > 15)
        throw std::invalid_argument("generate: desk-scale guard is vertices <= 10, edges <= 15");
    if (spec.simple && spec.edges > spec.vertices * (spec.vertices - 1) / 2)
        throw std::invalid_argument("generate: edge count exceeds simple capacity");

    std::vector<Multigraph> finals;
    auto keep = [&](std::vector<Multigraph>& out, const Multigraph& g) {
        if (spec.connected && !is_connected(g)) return;
        if (spec.nonplanar && is_planar_bool(g)) return;
        out.push_back(g);
    };

    Multigraph root(spec.vertices);
    const int split_level = std::min(5, spec.edges);
    if (threads <= 1 || split_level == spec.edges) {
        detail::generation_dfs(root, canonical_key(root), spec.edges, spec.simple,
                               [&](const Multigraph& g) { keep(finals, g); });
    } else {
        std::vector<std::pair<Multigraph, CanonicalKey>> frontier;
        detail::generation_dfs(root, canonical_key(root), split_level, spec.simple,
                               [&](const Multigraph& g) {
                                   frontier.emplace_back(g, canonical_key(g));
                               });
        std::vector<std::vector<Multigraph>> buckets(frontier.size());
        parallel_for(frontier.size(), threads, [&](size_t i) {
            detail::generation_dfs(frontier[i].first, frontier[i].second, spec.edges, spec.simple,
                                   [&](const Multigraph& g) { keep(buckets[i], g); });
        });
        for (std::vector<Multigraph>& b : buckets)
            for (Multigraph& g : b) finals.push_back(std::move(g));
    }
    std::sort(finals.begin(), finals.end(), [](const Multigraph& a, const Multigraph& b) {
        return canonical_key(a) < canonical_key(b);
    });
    return finals;
}

// --- minor minimality audit ------------------------------------------------------

struct AuditMemo {
    std::mutex mu;
    // canonical key -> verdict kind (plus a flag for "is 11_8_1")
    std::unordered_map<CanonicalKey, char> verdicts;  // 'a' achiral, 'c' chiral, 'u' unresolved
};

struct AuditOutcome {
    bool minimal = true;
    bool hard_failure = false;
    int minors_walked = 0;
    int unresolved_minors = 0;
    std::vector<std::string> chiral_minors;  // canonical keys, hex
    std::string detail;
};

namespace detail {

inline Multigraph strip_isolated_plain(Multigraph g) {
    for (;;) {
        std::vector<int> iso = g.isolated_vertices();
        if (iso.empty()) return g;
        g = delete_vertex(g, iso.back());
    }
}

inline std::vector<Multigraph> components_of(const Multigraph& g) {
    std::vector<int> comp(g.order(), -1);
    int nc = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<std::vector<int>> remap(nc);
    std::vector<int> local(g.order());
    std::vector<int> counts(nc, 0);
    for (int v = 0; v < g.order(); ++v) local[v] = counts[comp[v]]++;
    std::vector<std::vector<Edge>> edges(nc);
    for (const Edge& e : g.edges()) edges[comp[e.u]].emplace_back(local[e.u], local[e.v]);
    std::vector<Multigraph> out;
    for (int c = 0; c < nc; ++c) out.emplace_back(counts[c], edges[c]);
    return out;
}

// Verdict for one (stripped) proper minor. Disconnected minors discharge
// component-wise: everything planar, or one non-planar component certified
// with the rest planar.
inline char discharge_minor(const Multigraph& h, const CanonicalKey& hkey,
                            const CanonicalKey& key_11_8_1, int max_deletions) {
    if (hkey == key_11_8_1) return 'c';
    if (h.size() == 0) return 'a';
    if (is_planar_bool(h)) return 'a';
    if (!h.is_simple()) return nonsimple_achiral(h) ? 'a' : 'u';
    if (!is_connected(h)) {
        std::optional<Multigraph> nonplanar_comp;
        for (Multigraph& c : components_of(h)) {
            if (is_planar_bool(c)) continue;
            if (nonplanar_comp) return 'u';  // cannot happen below 18 edges
            nonplanar_comp = std::move(c);
        }
        if (!nonplanar_comp) return 'a';
        Verdict v = classify_embeddability(*nonplanar_comp, max_deletions);
        if (v.kind == Verdict::Kind::Chiral) return 'c';
        return v.kind == Verdict::Kind::Achiral ? 'a' : 'u';
    }
    Verdict v = classify_embeddability(h, max_deletions);
    if (v.kind == Verdict::Kind::Chiral) return 'c';
    return v.kind == Verdict::Kind::Achiral ? 'a' : 'u';
}

}  // namespace detail

// Walks every proper minor of g up to isomorphism and discharges each one.
// Any chiral proper minor other than 11_8_1 is a hard failure: it would
// contradict the classification this engine reproduces.
inline AuditOutcome minor_minimality_audit(const Multigraph& g, AuditMemo* memo = nullptr,
                                           int max_deletions = 3) {
    static const CanonicalKey key_11_8_1 = canonical_key(catalog_entry("11_8_1").graph);
    AuditMemo local;
    AuditMemo& mm = memo ? *memo : local;
    AuditOutcome out;

    std::set<CanonicalKey> visited;
    std::vector<Multigraph> frontier;
    auto push_children = [&](const Multigraph& cur) {
        for (auto& [model, child] : enumerate_one_step_minors(cur)) {
            Multigraph stripped = detail::strip_isolated_plain(child);
            CanonicalKey k = canonical_key(stripped);
            if (visited.insert(k).second) frontier.push_back(stripped);
        }
    };
    push_children(g);
    while (!frontier.empty()) {
        Multigraph cur = std::move(frontier.back());
        frontier.pop_back();
        CanonicalKey k = canonical_key(cur);
        char verdict;
        {
            std::unique_lock<std::mutex> lock(mm.mu);
            auto it = mm.verdicts.find(k);
            if (it != mm.verdicts.end()) {
                verdict = it->second;
            } else {
                lock.unlock();
                verdict = detail::discharge_minor(cur, k, key_11_8_1, max_deletions);
                lock.lock();
                mm.verdicts.emplace(k, verdict);
            }
        }
        ++out.minors_walked;
        if (verdict == 'c') {
            out.minimal = false;
            out.chiral_minors.push_back(key_to_hex(k));
            if (k != key_11_8_1) {
                out.hard_failure = true;
                out.detail += "chiral proper minor " + key_to_hex(k) + "; ";
            }
        } else if (verdict == 'u') {
            ++out.unresolved_minors;
        }
        if (cur.size() > 0) push_children(cur);
    }
    return out;
}

// --- classification records -------------------------------------------------------

struct ClassificationRecord {
    CanonicalKey key;
    Multigraph graph;
    int order = 0;
    int size = 0;
    std::vector<int> degree_sequence;
    Verdict verdict;
    bool contains_11_8_1 = false;
    bool minor_minimal = false;
    std::optional<std::string> catalog_name;
    int audit_minors_walked = 0;
    int audit_unresolved = 0;
    double seconds = 0;  // never serialized: reports must be byte-stable
};

struct SizeOrderStats {
    int size = 0, order = 0;
    int generated_connected = 0, planar = 0, nonplanar = 0;
    int achiral = 0, chiral = 0, unresolved = 0, mmic = 0;
};

struct PipelineOptions {
    bool audit = false;
    int threads = 0;  // 0 = default_threads()
    int max_deletions = 3;
    int min_size = 9;  // no smaller size admits a non-planar graph
};

struct PipelineResult {
    std::vector<ClassificationRecord> records;  // sorted by (size, key)
    std::vector<SizeOrderStats> stats;          // sorted by (size, order)
    std::vector<std::string> hard_failures;
    int max_size = 0;
};

// Size s and order in [5, s-3]: non-planarity needs at least five vertices and,
// in a connected graph, at least order+3 edges.
inline std::vector<int> candidate_orders(int size) {
    std::vector<int> orders;
    for (int n = 5; n <= size - 3 && n <= 9; ++n)
        if (size <= n * (n - 1) / 2) orders.push_back(n);
    return orders;
}

inline PipelineResult classify_all(int max_size = 12, PipelineOptions opts = {}) {
    if (max_size > 12) throw std::invalid_argument("classify_all supports max_size <= 12");
    const int threads = opts.threads > 0 ? opts.threads : default_threads();
    PipelineResult result;
    result.max_size = max_size;

    static const CanonicalKey key_11_8_1 = canonical_key(catalog_entry("11_8_1").graph);
    std::unordered_map<CanonicalKey, std::string> names;
    for (const NamedGraph& ng : catalog()) names[canonical_key(ng.graph)] = ng.name;

    AuditMemo audit_memo;

    for (int s = opts.min_size; s <= max_size; ++s) {
        for (int n : candidate_orders(s)) {
            GenerationSpec gs;
            gs.vertices = n;
            gs.edges = s;
            gs.connected = true;
            gs.simple = true;
            gs.nonplanar = false;
            std::vector<Multigraph> all = generate(gs, threads);
            SizeOrderStats st;
            st.size = s;
            st.order = n;
            st.generated_connected = static_cast<int>(all.size());
            std::vector<Multigraph> candidates;
            for (Multigraph& g : all) {
                if (is_planar_bool(g)) ++st.planar;
                else candidates.push_back(std::move(g));
            }
            st.nonplanar = static_cast<int>(candidates.size());

            std::vector<ClassificationRecord> recs(candidates.size());
            parallel_for(candidates.size(), threads, [&](size_t i) {
                const Multigraph& g = candidates[i];
                ClassificationRecord rec;
                rec.graph = g;
                rec.key = canonical_key(g);
                rec.order = g.order();
                rec.size = g.size();
                rec.degree_sequence = degree_sequence(g);
                rec.verdict = classify_embeddability(g, opts.max_deletions);
                rec.contains_11_8_1 =
                    s >= 11 && has_minor(g, catalog_entry("11_8_1").graph).has_value();
                if (rec.verdict.kind == Verdict::Kind::Chiral) {
                    if (s == 12 && !opts.audit) {
                        // fast path: a chiral simple graph of size 12 without an
                        // 11_8_1 minor is minor minimal
                        rec.minor_minimal = !rec.contains_11_8_1;
                    } else {
                        AuditOutcome ao = minor_minimality_audit(g, &audit_memo,
                                                                 opts.max_deletions);
                        rec.minor_minimal = ao.minimal;
                        rec.audit_minors_walked = ao.minors_walked;
                        rec.audit_unresolved = ao.unresolved_minors;
                        if (ao.hard_failure) {
                            std::lock_guard<std::mutex> lock(audit_memo.mu);
                            result.hard_failures.push_back("audit: " + key_to_hex(rec.key) +
                                                           ": " + ao.detail);
                        }
                        if (s == 12 && ao.minimal != !rec.contains_11_8_1) {
                            std::lock_guard<std::mutex> lock(audit_memo.mu);
                            result.hard_failures.push_back(
                                "fast path and audit disagree on " + key_to_hex(rec.key));
                        }
                    }
                }
                auto it = names.find(rec.key);
                if (it != names.end()) rec.catalog_name = it->second;
                recs[i] = std::move(rec);
            });
            for (ClassificationRecord& rec : recs) {
                switch (rec.verdict.kind) {
                    case Verdict::Kind::Achiral: ++st.achiral; break;
                    case Verdict::Kind::Chiral: ++st.chiral; break;
                    case Verdict::Kind::Unresolved: ++st.unresolved; break;
                }
                if (rec.minor_minimal) ++st.mmic;
                result.records.push_back(std::move(rec));
            }
            result.stats.push_back(st);
        }
    }
    std::sort(result.records.begin(), result.records.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) {
                  return a.size < b.size || (a.size == b.size && a.key < b.key);
              });
    std::sort(result.stats.begin(), result.stats.end(),
              [](const SizeOrderStats& a, const SizeOrderStats& b) {
                  return a.size < b.size || (a.size == b.size && a.order < b.order);
              });

    // a size-12 chiral class outside order {7,8,9} would contradict the
    // classification; record it as a hard failure rather than asserting
    for (const ClassificationRecord& rec : result.records)
        if (rec.size == 12 && rec.verdict.kind == Verdict::Kind::Chiral &&
            (rec.order < 7 || rec.order > 9))
            result.hard_failures.push_back("size-12 chiral class of order " +
                                           std::to_string(rec.order) + ": " +
                                           key_to_hex(rec.key));
    std::sort(result.hard_failures.begin(), result.hard_failures.end());
    return result;
}

// Cross-validation of the order-7 case split: every size-12 order-7 candidate
// with a K33 minor reaches K33 through H1 or H2 by two deletions then one
// contraction.
inline bool h_route_exists(const Multigraph& g) {
    const Multigraph h1 = catalog_entry("H1").graph;
    const Multigraph h2 = catalog_entry("H2").graph;
    const std::vector<Edge>& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            Multigraph d = delete_edge(delete_edge(g, es[i]), es[j]);
            if (is_isomorphic(d, h1) || is_isomorphic(d, h2)) return true;
        }
    return false;
}

inline int mmic_count(const PipelineResult& r, int size) {
    int c = 0;
    for (const ClassificationRecord& rec : r.records)
        if (rec.minor_minimal && (size == 0 || rec.size == size)) ++c;
    return c;
}

}  // namespace chirality

#endif
