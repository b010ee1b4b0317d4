#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "bclique/signed_graph.hpp"

namespace bclique {

enum class EdgeListFormat : std::uint8_t {
    triple,     // "u v s" with s in {+, -}
    snap_sign,  // "u v s" with s in {1, -1, +, -}
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

// Reads a whitespace-separated signed edge list. Vertex labels are arbitrary
// tokens and get densely renumbered 0..n-1 in order of first appearance; the
// original labels are kept on the returned graph. Lines starting with '#' and
// blank lines are skipped.
inline SignedGraph load_edge_list(std::istream& in, EdgeListFormat format) {
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<SignedEdge> edges;
    auto intern = [&](const std::string& tok) {
        auto it = ids.find(tok);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(labels.size());
        ids.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b, s, extra;
        if (!(ls >> a)) continue;  // blank
        if (a[0] == '#') continue;
        if (!(ls >> b >> s)) throw ParseError(line_no, "expected 'u v sign'");
        if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");

        EdgeSign sign;
        if (s == "+" || (format == EdgeListFormat::snap_sign && s == "1"))
            sign = EdgeSign::positive;
        else if (s == "-" || (format == EdgeListFormat::snap_sign && s == "-1"))
            sign = EdgeSign::negative;
        else
            throw ParseError(line_no, "unknown sign token '" + s + "'");

        int u = intern(a), v = intern(b);
        if (u == v) throw ParseError(line_no, "self-loop on '" + a + "'");
        edges.push_back({u, v, sign});
    }
    const int n = static_cast<int>(labels.size());
    return SignedGraph::from_edges(n, edges, std::move(labels));
}

inline SignedGraph load_edge_list_file(const std::string& path, EdgeListFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return load_edge_list(in, format);
}

// Writes each undirected edge once (u ascending, then neighbor id), using the
// graph's original labels when present. load(serialize(g)) reproduces the
// same edge multiset and signs.
inline void serialize_edge_list(const SignedGraph& g, std::ostream& out, EdgeListFormat format) {
    const char* pos_tok = "+";
    const char* neg_tok = format == EdgeListFormat::snap_sign ? "-1" : "-";
    if (format == EdgeListFormat::snap_sign) pos_tok = "1";
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.pos_neighbors(u))
            if (v > u) out << g.label(u) << ' ' << g.label(v) << ' ' << pos_tok << '\n';
        for (int v : g.neg_neighbors(u))
            if (v > u) out << g.label(u) << ' ' << g.label(v) << ' ' << neg_tok << '\n';
    }
}

inline void write_label_map(const SignedGraph& g, std::ostream& out) {
    for (int v = 0; v < g.vertex_count(); ++v) out << v << ' ' << g.label(v) << '\n';
}

}  // namespace bclique
