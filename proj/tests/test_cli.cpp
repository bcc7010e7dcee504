#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "chirality/cli.hpp"

using namespace chirality;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("chirality_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"chirality"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

struct CaptureStdout {
    std::streambuf* old;
    std::ostringstream os;
    CaptureStdout() : old(std::cout.rdbuf(os.rdbuf())) {}
    ~CaptureStdout() { std::cout.rdbuf(old); }
};

}  // namespace

TEST_CASE("cli: planar on a double-edge mg file") {
    TempDir tmp;
    fs::path f = tmp.path / "double.mg";
    std::ofstream(f) << "2 2\n0 1\n0 1\n";
    CaptureStdout cap;
    REQUIRE(run_cli({"planar", f.string().c_str()}) == 0);
    REQUIRE(cap.os.str().find("\"planar\":true") != std::string::npos);
}

TEST_CASE("cli: planar verify mode re-checks the obstruction") {
    TempDir tmp;
    fs::path f = tmp.path / "k33.g6";
    std::ofstream(f) << to_graph6(complete_bipartite(3, 3)) << "\n";
    CaptureStdout cap;
    REQUIRE(run_cli({"planar", "--verify", f.string().c_str()}) == 0);
    REQUIRE(cap.os.str().find("\"witness_verified\":true") != std::string::npos);
}

TEST_CASE("cli: gen round trips through files") {
    TempDir tmp;
    std::string g6;
    {
        CaptureStdout cap;
        REQUIRE(run_cli({"gen", "--vertices", "5", "--edges", "6", "--connected"}) == 0);
        g6 = cap.os.str();
    }
    std::istringstream lines(g6);
    std::string line;
    int count = 0;
    std::set<CanonicalKey> keys;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        Multigraph g = from_graph6(line);
        REQUIRE(g.order() == 5);
        REQUIRE(g.size() == 6);
        REQUIRE(is_connected(g));
        keys.insert(canonical_key(g));
        ++count;
    }
    REQUIRE(count > 0);
    REQUIRE(static_cast<int>(keys.size()) == count);
}

TEST_CASE("cli: aut reports group order") {
    TempDir tmp;
    fs::path f = tmp.path / "k33.g6";
    std::ofstream(f) << to_graph6(complete_bipartite(3, 3)) << "\n";
    CaptureStdout cap;
    REQUIRE(run_cli({"aut", f.string().c_str()}) == 0);
    REQUIRE(cap.os.str().find("\"order\":72") != std::string::npos);
}

TEST_CASE("cli: minor search and replay") {
    TempDir tmp;
    fs::path f = tmp.path / "g.mg";
    std::ofstream(f) << to_mg(catalog_entry("12_7_2").graph);
    std::string model_json;
    {
        CaptureStdout cap;
        REQUIRE(run_cli({"minor", f.string().c_str(), "--target", "k33"}) == 0);
        model_json = cap.os.str();
    }
    REQUIRE(model_json.find("\"steps\"") != std::string::npos);
    fs::path mf = tmp.path / "model.json";
    std::ofstream(mf) << model_json;
    CaptureStdout cap;
    REQUIRE(run_cli({"minor", f.string().c_str(), "--replay", mf.string().c_str()}) == 0);
    REQUIRE(cap.os.str().find("\"replay_ok\":true") != std::string::npos);
}

TEST_CASE("cli: certify emits a full certificate payload") {
    TempDir tmp;
    fs::path f = tmp.path / "g.mg";
    std::ofstream(f) << to_mg(catalog_entry("12_9_1").graph);
    CaptureStdout cap;
    REQUIRE(run_cli({"certify", f.string().c_str()}) == 0);
    std::string out = cap.os.str();
    REQUIRE(out.find("\"verdict\":\"chiral\"") != std::string::npos);
    REQUIRE(out.find("\"automorphism_audit\"") != std::string::npos);
}

TEST_CASE("cli: catalog --validate passes") {
    CaptureStdout cap;
    REQUIRE(run_cli({"catalog", "--validate"}) == 0);
    REQUIRE(cap.os.str().find("catalog OK") != std::string::npos);
}

TEST_CASE("cli: malformed file yields a parse error exit") {
    TempDir tmp;
    fs::path f = tmp.path / "bad.mg";
    std::ofstream(f) << "not a graph\n";
    REQUIRE(run_cli({"planar", f.string().c_str()}) == 2);
}

TEST_CASE("cli: classify small runs write records and summary") {
    TempDir tmp;
    fs::path out = tmp.path / "records.jsonl";
    CaptureStdout cap;
    int rc = run_cli({"classify", "--max-size", "10", "--out", out.string().c_str()});
    REQUIRE(rc == 0);
    REQUIRE(cap.os.str().find("MMIC(10) = 0") != std::string::npos);
    std::ifstream in(out);
    std::string line;
    int lines = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    REQUIRE(lines >= 2);  // at least K33 and K5 records
    // report re-renders from the records file
    CaptureStdout cap2;
    REQUIRE(run_cli({"report", out.string().c_str()}) == 0);
    REQUIRE(cap2.os.str().find("MMIC(10) = 0") != std::string::npos);
}
