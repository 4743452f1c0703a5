#include "edge_list.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace surplus {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
    fail(Errc::parse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    size_t line_no = 0;
    uint64_t n = 0, m = 0;
    bool have_header = false;
    std::vector<std::pair<uint32_t, uint32_t>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> n >> m)) parse_fail(line_no, "expected header \"n m\"");
            std::string extra;
            if (ls >> extra) parse_fail(line_no, "trailing tokens after header");
            if (n > UINT32_MAX) parse_fail(line_no, "vertex count too large");
            have_header = true;
            edges.reserve(m);
            continue;
        }
        uint64_t u = 0, v = 0;
        if (!(ls >> u >> v)) parse_fail(line_no, "expected edge \"u v\"");
        std::string extra;
        if (ls >> extra) parse_fail(line_no, "trailing tokens after edge");
        if (edges.size() == m) parse_fail(line_no, "more than the declared " + std::to_string(m) + " edges");
        if (u >= v) parse_fail(line_no, "edge endpoints must satisfy u < v");
        if (v >= n) parse_fail(line_no, "endpoint " + std::to_string(v) + " not below n=" + std::to_string(n));
        edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
    }
    if (!have_header) fail(Errc::parse, "empty input: missing \"n m\" header");
    if (edges.size() != m)
        fail(Errc::parse, "declared " + std::to_string(m) + " edges but found " +
                              std::to_string(edges.size()));
    return Graph::from_edges(static_cast<uint32_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    require(out.good(), Errc::io, "cannot open " + path + " for writing");
    write_edge_list(out, g);
    out.flush();
    require(out.good(), Errc::io, "write failed for " + path);
}

}  // namespace surplus
