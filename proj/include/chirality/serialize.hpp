#ifndef CHIRALITY_SERIALIZE_HPP
#define CHIRALITY_SERIALIZE_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "chirality/formats.hpp"
#include "chirality/pipeline.hpp"

namespace chirality {

using json = nlohmann::json;

inline json edges_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
}

inline json permutation_json(const Permutation& p) { return json(p.img); }

inline json planarity_json(const PlanarityVerdict& v) {
    json j;
    j["planar"] = v.planar;
    if (v.planar) j["rotation"] = v.rotation;
    else j["obstruction"] = edges_json(v.obstruction);
    return j;
}

inline json certificate_json(const AchiralityCertificate& c) {
    json j;
    if (const auto* p = std::get_if<PlanarCertificate>(&c)) {
        j["type"] = "planar";
        j["witness"] = planarity_json(p->verdict);
    } else if (const auto* t = std::get_if<TwinMirrorCertificate>(&c)) {
        j["type"] = "twin_mirror";
        j["pair"] = {t->v, t->vp};
        j["remainder"] = planarity_json(t->remainder);
    } else if (const auto* t1 = std::get_if<TypeOneCertificate>(&c)) {
        j["type"] = "type_one";
        j["phi"] = permutation_json(t1->phi);
        j["V1"] = t1->V1;
        j["W2"] = t1->W2;
        j["W2_prime"] = t1->W2p;
        j["V1_planarity"] = planarity_json(t1->v1_planarity);
    } else if (const auto* a = std::get_if<AddedEdgeMirrorCertificate>(&c)) {
        j["type"] = "added_edge_mirror";
        j["added_edge"] = {a->added.u, a->added.v};
        j["pair1"] = {a->pair1[0], a->pair1[1]};
        j["pair2"] = {a->pair2[0], a->pair2[1]};
        j["adjacencies_used"] = edges_json(a->adjacencies_used);
        j["minus_pair1"] = planarity_json(a->del_pair1);
        j["minus_pair2"] = planarity_json(a->del_pair2);
    } else if (const auto* ns = std::get_if<NonSimpleCertificate>(&c)) {
        j["type"] = "non_simple";
        switch (ns->variant) {
            case NonSimpleCertificate::Variant::Planar:
                j["variant"] = "planar";
                j["witness"] = planarity_json(ns->planarity);
                break;
            case NonSimpleCertificate::Variant::DoubleEdgePlanar:
                j["variant"] = "double_edge_planar";
                j["double_pair"] = {ns->double_pair.u, ns->double_pair.v};
                j["witness"] = planarity_json(ns->planarity);
                break;
            case NonSimpleCertificate::Variant::DoubleEdgeOverK33:
                j["variant"] = "double_edge_over_k33";
                j["double_pair"] = {ns->double_pair.u, ns->double_pair.v};
                break;
            case NonSimpleCertificate::Variant::LoopOnK33:
                j["variant"] = "loop_on_k33";
                j["loop_vertex"] = ns->loop.u;
                j["mirror_pair"] = {ns->mirror_pair[0], ns->mirror_pair[1]};
                break;
        }
    }
    return j;
}

inline json chirality_json(const ChiralityCertificate& c) {
    json j;
    j["type"] = "moebius_loop";
    j["deletions"] = edges_json(c.deletions);
    j["cycle"] = edges_json(c.cycle);
    j["n"] = c.n;
    json auts = json::array();
    for (size_t i = 0; i < c.automorphisms.size(); ++i) {
        json e;
        e["perm"] = permutation_json(c.automorphisms[i]);
        e["preserves_deletions"] = static_cast<bool>(c.preserves_d[i]);
        e["preserves_cycle"] = static_cast<bool>(c.preserves_c[i]);
        auts.push_back(e);
    }
    j["automorphism_audit"] = auts;
    return j;
}

inline json record_json(const ClassificationRecord& rec) {
    json j;
    j["key"] = key_to_hex(rec.key);
    j["order"] = rec.order;
    j["size"] = rec.size;
    j["degree_sequence"] = rec.degree_sequence;
    j["graph6"] = to_graph6(rec.graph);
    j["verdict"] = verdict_name(rec.verdict.kind);
    if (rec.verdict.achiral) j["certificate"] = certificate_json(*rec.verdict.achiral);
    else if (rec.verdict.chiral) j["certificate"] = chirality_json(*rec.verdict.chiral);
    if (!rec.verdict.notes.empty()) j["notes"] = rec.verdict.notes;
    j["contains_11_8_1"] = rec.contains_11_8_1;
    j["minor_minimal"] = rec.minor_minimal;
    if (rec.catalog_name) j["catalog_name"] = *rec.catalog_name;
    return j;
}

inline std::string records_jsonl(const PipelineResult& r) {
    std::ostringstream os;
    for (const ClassificationRecord& rec : r.records) os << record_json(rec).dump() << '\n';
    return os.str();
}

// Human-readable summary. Deterministic: no timing, stable ordering. MMIC rows
// are named by catalog isomorphism and listed by name.
inline std::string summary_text(const PipelineResult& r) {
    std::ostringstream os;
    os << "size order connected planar nonplanar achiral chiral unresolved mmic\n";
    for (const SizeOrderStats& st : r.stats) {
        os << st.size << ' ' << st.order << ' ' << st.generated_connected << ' ' << st.planar
           << ' ' << st.nonplanar << ' ' << st.achiral << ' ' << st.chiral << ' '
           << st.unresolved << ' ' << st.mmic << '\n';
    }
    std::vector<std::string> rows;
    for (const ClassificationRecord& rec : r.records) {
        if (!rec.minor_minimal) continue;
        std::string name = rec.catalog_name ? *rec.catalog_name : ("<unnamed " + key_to_hex(rec.key) + ">");
        std::ostringstream row;
        row << name << " size=" << rec.size << " order=" << rec.order << " degrees=(";
        for (size_t i = 0; i < rec.degree_sequence.size(); ++i)
            row << (i ? "," : "") << rec.degree_sequence[i];
        row << ")";
        rows.push_back(row.str());
    }
    std::sort(rows.begin(), rows.end());
    os << "minor minimal intrinsically chiral classes:\n";
    for (const std::string& row : rows) os << "  " << row << '\n';
    int unresolved_total = 0;
    for (const SizeOrderStats& st : r.stats) unresolved_total += st.unresolved;
    os << "unresolved = " << unresolved_total << '\n';
    for (const std::string& hf : r.hard_failures) os << "HARD FAILURE: " << hf << '\n';
    os << "MMIC(" << r.max_size << ") = " << mmic_count(r, r.max_size) << ", MMIC(<=" << r.max_size
       << ") = " << mmic_count(r, 0) << '\n';
    return os.str();
}

inline json minor_model_json(const MinorModel& m) {
    json j;
    j["source_key"] = key_to_hex(m.source_key);
    j["target_key"] = key_to_hex(m.target_key);
    json steps = json::array();
    for (const MinorStep& s : m.steps) {
        json e;
        switch (s.kind) {
            case MinorStep::Kind::DeleteEdge: e["op"] = "delete_edge"; e["edge"] = {s.u, s.v}; break;
            case MinorStep::Kind::ContractEdge: e["op"] = "contract_edge"; e["edge"] = {s.u, s.v}; break;
            case MinorStep::Kind::DeleteVertex: e["op"] = "delete_vertex"; e["vertex"] = s.u; break;
        }
        steps.push_back(e);
    }
    j["steps"] = steps;
    return j;
}

inline MinorModel minor_model_from_json(const json& j) {
    auto hex_to_key = [](const std::string& hex) {
        if (hex.size() % 2) throw std::invalid_argument("bad key hex");
        CanonicalKey k;
        auto nib = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            throw std::invalid_argument("bad key hex digit");
        };
        for (size_t i = 0; i < hex.size(); i += 2)
            k.push_back(static_cast<char>(nib(hex[i]) * 16 + nib(hex[i + 1])));
        return k;
    };
    MinorModel m;
    m.source_key = hex_to_key(j.at("source_key").get<std::string>());
    m.target_key = hex_to_key(j.at("target_key").get<std::string>());
    for (const json& e : j.at("steps")) {
        std::string op = e.at("op").get<std::string>();
        if (op == "delete_edge")
            m.steps.push_back(MinorStep::del_edge(Edge(e.at("edge")[0], e.at("edge")[1])));
        else if (op == "contract_edge")
            m.steps.push_back(MinorStep::con_edge(Edge(e.at("edge")[0], e.at("edge")[1])));
        else if (op == "delete_vertex")
            m.steps.push_back(MinorStep::del_vertex(e.at("vertex").get<int>()));
        else
            throw std::invalid_argument("unknown step op: " + op);
    }
    return m;
}

}  // namespace chirality

#endif
