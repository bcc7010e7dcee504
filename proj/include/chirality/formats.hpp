#ifndef CHIRALITY_FORMATS_HPP
#define CHIRALITY_FORMATS_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chirality/multigraph.hpp"

namespace chirality {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// --- graph6 (simple graphs, one per line, header-free) --------------------

inline std::string to_graph6(const Multigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("graph6 encodes simple graphs only");
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 writer supports n <= 62");
    std::string s;
    s.push_back(static_cast<char>(n + 63));
    // upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    int bit = 5;
    char cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                s.push_back(static_cast<char>(cur + 63));
                bit = 5;
                cur = 0;
            }
        }
    if (n >= 2 && bit != 5) s.push_back(static_cast<char>(cur + 63));
    return s;
}

inline Multigraph from_graph6(const std::string& line, int line_no = 1) {
    if (line.empty()) throw ParseError(line_no, "empty graph6 line");
    size_t pos = 0;
    if (static_cast<unsigned char>(line[0]) == 126)
        throw ParseError(line_no, "graph6 reader supports n <= 62");
    int n = line[0] - 63;
    if (n < 0 || n > 62) throw ParseError(line_no, "bad graph6 vertex count byte");
    ++pos;
    std::vector<Edge> edges;
    int bit = 5;
    int cur = pos < line.size() ? line[pos] - 63 : 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (pos >= line.size()) throw ParseError(line_no, "graph6 line truncated");
            if (cur < 0 || cur > 63) throw ParseError(line_no, "bad graph6 byte");
            if (cur & (1 << bit)) edges.emplace_back(u, v);
            if (--bit < 0) {
                ++pos;
                bit = 5;
                cur = pos < line.size() ? line[pos] - 63 : 0;
            }
        }
    return Multigraph(n, std::move(edges));
}

// --- .mg multigraph text format -------------------------------------------
// First line "n m", then m lines "u v" (0-based). u == v encodes a loop,
// repeated lines encode multiplicity. Writer emits edges sorted, so
// write(read(write(G))) is byte-identical to write(G).

inline std::string to_mg(const Multigraph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

inline Multigraph from_mg(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    auto next_line = [&]() {
        while (std::getline(is, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(1, "missing header line");
    std::istringstream hs(line);
    int n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError(line_no, "bad header, expected 'n m'");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError(line_no + 1, "fewer edges than declared");
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) throw ParseError(line_no, "bad edge line, expected 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "edge endpoint out of range");
        edges.emplace_back(u, v);
    }
    if (next_line()) throw ParseError(line_no, "trailing content after declared edges");
    return Multigraph(n, std::move(edges));
}

// --- DOT export ------------------------------------------------------------

inline std::string to_dot(const Multigraph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace chirality

#endif
