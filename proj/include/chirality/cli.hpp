#ifndef CHIRALITY_CLI_HPP
#define CHIRALITY_CLI_HPP

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chirality/catalog_validate.hpp"
#include "chirality/serialize.hpp"

namespace chirality {
namespace cli {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// .mg by extension, graph6 (first non-empty line) otherwise.
inline Multigraph read_graph_file(const std::string& path) {
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".mg") return from_mg(slurp(path));
    std::istringstream is(slurp(path));
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return from_graph6(line, line_no);
    }
    throw ParseError(1, "no graph in file");
}

inline const Multigraph& target_by_flag(const std::string& t) {
    static const std::map<std::string, std::string> names = {
        {"k5", "K5"}, {"k33", "K33"}, {"m3", "M3"}, {"m5", "M5"}, {"11_8_1", "11_8_1"}};
    auto it = names.find(t);
    if (it == names.end()) throw CLI::ValidationError("--target", "unknown target " + t);
    return catalog_entry(it->second).graph;
}

inline int run(int argc, const char* const* argv) {
    CLI::App app{"classification engine for embeddability symmetry of small graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "stream non-isomorphic graphs");
    int gen_n = 0, gen_m = 0;
    bool gen_connected = false, gen_nonplanar = false, gen_multi = false;
    std::string gen_format = "g6";
    gen->add_option("--vertices", gen_n, "vertex count")->required();
    gen->add_option("--edges", gen_m, "edge count")->required();
    gen->add_flag("--connected", gen_connected, "connected graphs only");
    gen->add_flag("--nonplanar", gen_nonplanar, "non-planar graphs only");
    gen->add_flag("--multigraph", gen_multi, "allow loops and parallel edges");
    gen->add_option("--format", gen_format, "g6 or mg")->check(CLI::IsMember({"g6", "mg"}));

    // planar
    auto* planar = app.add_subcommand("planar", "planarity verdict with witness");
    std::string planar_file;
    bool planar_verify = false;
    planar->add_option("file", planar_file, "graph file (.mg or graph6)")->required();
    planar->add_flag("--verify", planar_verify, "re-verify the obstruction witness");

    // aut
    auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
    std::string aut_file;
    aut->add_option("file", aut_file, "graph file")->required();

    // minor
    auto* minor = app.add_subcommand("minor", "minor containment against a named target");
    std::string minor_file, minor_target = "k33", minor_replay;
    minor->add_option("file", minor_file, "graph file")->required();
    minor->add_option("--target", minor_target, "k5|k33|m3|m5|11_8_1");
    minor->add_option("--replay", minor_replay, "replay a stored minor model (JSON)");

    // certify
    auto* certify = app.add_subcommand("certify", "embeddability verdict with certificate");
    std::string certify_file;
    certify->add_option("file", certify_file, "graph file")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "full classification pipeline");
    int classify_max = 12;
    bool classify_audit = false;
    std::string classify_out;
    classify->add_option("--max-size", classify_max, "largest size to classify");
    classify->add_flag("--audit", classify_audit, "walk all proper minors of chiral classes");
    classify->add_option("--out", classify_out, "write JSON-lines records to a file");

    // catalog
    auto* cat = app.add_subcommand("catalog", "emit the named graphs");
    bool cat_validate = false;
    cat->add_flag("--validate", cat_validate, "run the catalog validation report");

    // report
    auto* rep = app.add_subcommand("report", "re-render a summary from JSON-lines records");
    std::string rep_file;
    rep->add_option("file", rep_file, "records file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*gen) {
            GenerationSpec spec;
            spec.vertices = gen_n;
            spec.edges = gen_m;
            spec.connected = gen_connected;
            spec.simple = !gen_multi;
            spec.nonplanar = gen_nonplanar;
            if (gen_multi && gen_format == "g6")
                throw std::invalid_argument("graph6 cannot encode multigraphs; use --format mg");
            for (const Multigraph& g : generate(spec, default_threads())) {
                if (gen_format == "g6") std::cout << to_graph6(g) << '\n';
                else std::cout << to_mg(g);
            }
            return 0;
        }
        if (*planar) {
            Multigraph g = read_graph_file(planar_file);
            PlanarityVerdict v = is_planar(g);
            json j = planarity_json(v);
            if (planar_verify && !v.planar)
                j["witness_verified"] = verify_kuratowski_edges(g, v.obstruction);
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (*aut) {
            Multigraph g = read_graph_file(aut_file);
            AutomorphismGroup grp = automorphism_group(g);
            json j;
            j["order"] = grp.order;
            json gens = json::array();
            for (const Permutation& p : grp.generators) gens.push_back(permutation_json(p));
            j["generators"] = gens;
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (*minor) {
            Multigraph g = read_graph_file(minor_file);
            if (!minor_replay.empty()) {
                MinorModel model = minor_model_from_json(json::parse(slurp(minor_replay)));
                Multigraph end = replay(g, model);
                json j;
                j["replay_ok"] = true;
                j["result_key"] = key_to_hex(canonical_key(end));
                std::cout << j.dump() << '\n';
                return 0;
            }
            auto model = has_minor(g, target_by_flag(minor_target));
            if (model) std::cout << minor_model_json(*model).dump() << '\n';
            else std::cout << "{\"found\":false}" << '\n';
            return 0;
        }
        if (*certify) {
            Multigraph g = read_graph_file(certify_file);
            Verdict v = classify_embeddability(g);
            json j;
            j["verdict"] = verdict_name(v.kind);
            if (v.achiral) j["certificate"] = certificate_json(*v.achiral);
            if (v.chiral) j["certificate"] = chirality_json(*v.chiral);
            if (!v.notes.empty()) j["notes"] = v.notes;
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (*classify) {
            auto t0 = std::chrono::steady_clock::now();
            PipelineOptions opts;
            opts.audit = classify_audit;
            PipelineResult r = classify_all(classify_max, opts);
            std::string records = records_jsonl(r);
            std::string summary = summary_text(r);
            if (!classify_out.empty()) {
                std::ofstream out(classify_out, std::ios::binary);
                out << records;
                std::cout << summary;
            } else {
                std::cout << records;
                std::cerr << summary;
            }
            auto t1 = std::chrono::steady_clock::now();
            std::cerr << "elapsed: "
                      << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                      << " ms\n";
            int unresolved = 0;
            for (const SizeOrderStats& st : r.stats) unresolved += st.unresolved;
            return (unresolved == 0 && r.hard_failures.empty()) ? 0 : 1;
        }
        if (*cat) {
            for (const NamedGraph& e : catalog()) {
                json j;
                j["name"] = e.name;
                j["order"] = e.graph.order();
                j["size"] = e.graph.size();
                j["degree_sequence"] = degree_sequence(e.graph);
                j["key"] = key_to_hex(canonical_key(e.graph));
                if (e.graph.is_simple()) j["graph6"] = to_graph6(e.graph);
                json edges = json::array();
                for (const Edge& ed : e.graph.edges()) edges.push_back({ed.u, ed.v});
                j["edges"] = edges;
                j["note"] = e.provenance;
                std::cout << j.dump() << '\n';
            }
            if (cat_validate) {
                CatalogReport rep = validate_catalog();
                for (const CatalogCheck& c : rep.checks)
                    std::cout << (c.pass ? "PASS " : "FAIL ") << c.graph << ": " << c.check
                              << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
                std::cout << (rep.all_pass() ? "catalog OK" : "catalog INVALID") << '\n';
                return rep.all_pass() ? 0 : 1;
            }
            return 0;
        }
        if (*rep) {
            std::istringstream is(slurp(rep_file));
            std::string line;
            std::map<std::pair<int, int>, SizeOrderStats> stats;
            std::vector<std::string> mmic_rows;
            int max_size = 0;
            while (std::getline(is, line)) {
                if (line.empty()) continue;
                json j = json::parse(line);
                int s = j.at("size"), n = j.at("order");
                max_size = std::max(max_size, s);
                SizeOrderStats& st = stats[{s, n}];
                st.size = s;
                st.order = n;
                st.nonplanar++;
                std::string v = j.at("verdict");
                if (v == "achiral") st.achiral++;
                else if (v == "chiral") st.chiral++;
                else st.unresolved++;
                if (j.value("minor_minimal", false)) {
                    st.mmic++;
                    std::string name = j.value("catalog_name", "<unnamed>");
                    mmic_rows.push_back(name + " size=" + std::to_string(s) +
                                        " order=" + std::to_string(n));
                }
            }
            std::cout << "size order nonplanar achiral chiral unresolved mmic\n";
            int total_mmic = 0, max_size_mmic = 0;
            for (auto& [k, st] : stats) {
                std::cout << st.size << ' ' << st.order << ' ' << st.nonplanar << ' ' << st.achiral
                          << ' ' << st.chiral << ' ' << st.unresolved << ' ' << st.mmic << '\n';
                total_mmic += st.mmic;
                if (st.size == max_size) max_size_mmic += st.mmic;
            }
            std::sort(mmic_rows.begin(), mmic_rows.end());
            std::cout << "minor minimal intrinsically chiral classes:\n";
            for (const std::string& row : mmic_rows) std::cout << "  " << row << '\n';
            std::cout << "MMIC(" << max_size << ") = " << max_size_mmic << ", MMIC(<=" << max_size
                      << ") = " << total_mmic << '\n';
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace cli
}  // namespace chirality

#endif
