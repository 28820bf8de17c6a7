#include "eh/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace eh {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw ParameterError("edge list parse error at line " + std::to_string(line) + ": " + what);
}

// Strips comments/whitespace; returns false for blank lines.
bool significant(std::string& s) {
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    return s.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header 'n m'");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) parse_fail(lineno, "expected edge 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            parse_fail(lineno, "endpoint out of range [0," + std::to_string(n) + ")");
        if (static_cast<long long>(edges.size()) == m) parse_fail(lineno, "more edges than declared");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) parse_fail(lineno == 0 ? 1 : lineno, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        parse_fail(lineno, "declared " + std::to_string(m) + " edges, found " +
                               std::to_string(edges.size()));
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open graph file '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open output file '" + path + "'");
    write_edge_list(out, g);
}

Graph read_graph6_line(const std::string& raw) {
    std::string line = raw;
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParameterError("empty graph6 line");

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= line.size()) throw ParameterError("truncated graph6 data");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParameterError("invalid graph6 byte");
        return c - 63;
    };

    long long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (byte(1) == 63) throw ParameterError("graph6 n >= 2^18 unsupported");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos != nbytes)
        throw ParameterError("graph6 payload length mismatch for n = " + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + static_cast<std::size_t>(bit / 6));
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::ifstream in(path);
        if (!in) throw ParameterError("cannot open graph file '" + path + "'");
        std::string line;
        if (!std::getline(in, line)) throw ParameterError("empty graph6 file '" + path + "'");
        return read_graph6_line(line);
    }
    return read_edge_list_file(path);
}

}  // namespace eh
