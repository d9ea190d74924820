#ifndef WCOLIB_GRAPH_IO_HPP
#define WCOLIB_GRAPH_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "wcolib/graph.hpp"

namespace wcolib {

// Text format, one record per line:
//   c <comment>
//   p <n> <m>
//   e <u> <v>        0 <= u,v < n, u != v
// write_graph emits edges normalized (u < v) in sorted order, so
// parse(write(g)) round-trips bit-exact.

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long m = -1;
    long seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw SyntaxError(lineno, "duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw SyntaxError(lineno, "expected 'p <n> <m>'");
            g = Graph(n);
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw SyntaxError(lineno, "edge before header");
            long u, v;
            if (!(ls >> u >> v)) throw SyntaxError(lineno, "expected 'e <u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw SyntaxError(lineno, "endpoint out of range");
            if (u == v) throw LoopEdge("line " + std::to_string(lineno) + ": loop edge");
            if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                throw DuplicateEdge("line " + std::to_string(lineno) + ": duplicate edge");
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            ++seen;
            continue;
        }
        throw SyntaxError(lineno, "unknown record '" + tag + "'");
    }
    if (n < 0) throw SyntaxError(lineno, "missing header");
    if (seen != m) throw SyntaxError(lineno, "edge count mismatch");
    g.finalize();
    return g;
}

inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

inline Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path);
    out << write_graph(g);
}

}  // namespace wcolib

#endif  // WCOLIB_GRAPH_IO_HPP
