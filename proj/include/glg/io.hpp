#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "glg/graph.hpp"
#include "glg/graph6.hpp"

namespace glg {

/// Parses the plain edge-list format: first line "n m", then m lines
/// "u v" with 0-indexed endpoints. Strict: rejects self-loops, repeated
/// edges, out-of-range vertices, and an edge count that does not match m.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long n = -1, m = -1;
    if (!(in >> n >> m)) throw CodecError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw CodecError("edge list: negative n or m");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) throw CodecError("edge list: expected " + std::to_string(m) +
                                              " edges, found " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw CodecError("edge list: vertex out of range in edge " + std::to_string(i));
        if (u == v) throw CodecError("edge list: self-loop in edge " + std::to_string(i));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw CodecError("edge list: duplicate edge " + std::to_string(u) + " " +
                             std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long extra;
    if (in >> extra) throw CodecError("edge list: trailing tokens after the last edge");
    return g;
}

inline std::string strip_line_ending(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
    return s;
}

/// Loads graphs from a file. Format is detected from the first non-empty
/// line: graph6 records never contain a space, edge-list headers do.
/// A graph6 file yields one graph per line; an edge-list file yields one.
inline std::vector<Graph> load_graphs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CodecError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_line_ending(line);
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw CodecError("no graph records in file: " + path);

    if (lines.front().find(' ') != std::string::npos) {
        std::ostringstream joined;
        for (const auto& l : lines) joined << l << '\n';
        return {parse_edge_list(joined.str())};
    }
    std::vector<Graph> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(decode_graph6(l));
    return out;
}

/// Loads a file expected to hold exactly one graph.
inline Graph load_single_graph(const std::string& path) {
    auto graphs = load_graphs(path);
    if (graphs.size() != 1)
        throw CodecError(path + ": expected a single graph, found " +
                         std::to_string(graphs.size()) + " records");
    return graphs.front();
}

inline void save_graph6(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw CodecError("cannot write file: " + path);
    for (const auto& g : graphs) out << encode_graph6(g) << '\n';
}

} // namespace glg
