#include "pclique/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pclique/errors.hpp"

namespace pclique::io {

namespace {

Edge checked_edge(long long u, long long v, std::size_t n, long long base) {
    u -= base;
    v -= base;
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
        throw FormatError("edge endpoint out of range");
    }
    if (u == v) throw FormatError("self-loop in input");
    return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw FormatError("edge list: bad header, expected \"n m\"");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) throw FormatError("edge list: truncated after " + std::to_string(i) + " edges");
        edges.push_back(checked_edge(u, v, static_cast<std::size_t>(n), 0));
    }
    Graph g = Graph::from_edges(static_cast<std::size_t>(n), edges);
    if (g.edge_count() != static_cast<std::size_t>(m)) throw FormatError("edge list: duplicate edges");
    return g;
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || n < 0 || m < 0) throw FormatError("dimacs: bad problem line");
            edges.reserve(static_cast<std::size_t>(m));
        } else if (tag == "e") {
            if (n < 0) throw FormatError("dimacs: edge before problem line");
            long long u = 0;
            long long v = 0;
            if (!(ls >> u >> v)) throw FormatError("dimacs: bad edge line");
            edges.push_back(checked_edge(u, v, static_cast<std::size_t>(n), 1));
        } else {
            throw FormatError("dimacs: unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw FormatError("dimacs: missing problem line");
    if (edges.size() != static_cast<std::size_t>(m)) throw FormatError("dimacs: edge count mismatch");
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::string tok;
    in >> tok;
    in.seekg(0);
    if (tok == "p" || tok == "c") return read_dimacs(in);
    return read_edge_list(in);
}

}  // namespace pclique::io
