#include "ostar/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "ostar/error.hpp"

namespace ostar {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

OrientedGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    std::vector<Arc> arcs;
    std::set<std::pair<long long, long long>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || line.front() == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string tag;
            if (!(fields >> tag >> n) || tag != "dg" || n < 1) parse_error(line_no, "expected header 'dg <n>' with n >= 1");
            std::string rest;
            if (fields >> rest) parse_error(line_no, "trailing text after header");
            continue;
        }
        long long u = -1;
        long long v = -1;
        std::string rest;
        if (!(fields >> u >> v) || (fields >> rest)) parse_error(line_no, "expected '<u> <v>'");
        if (u < 0 || v < 0 || u >= n || v >= n) parse_error(line_no, "vertex id out of range [0," + std::to_string(n) + ")");
        if (u == v) parse_error(line_no, "loop arc");
        const auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (!seen.insert(key).second) {
            const bool same = std::find(arcs.begin(), arcs.end(), Arc{static_cast<Vertex>(u), static_cast<Vertex>(v)}) != arcs.end();
            parse_error(line_no, same ? "duplicate arc" : "arc closes a digon");
        }
        arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (n < 0) parse_error(line_no, "missing 'dg <n>' header");
    return OrientedGraph::from_arcs(static_cast<std::size_t>(n), arcs);
}

OrientedGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    return read_graph(in);
}

void write_graph(std::ostream& out, const OrientedGraph& g) {
    out << "dg " << g.order() << '\n';
    for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
}

void write_graph_file(const std::filesystem::path& path, const OrientedGraph& g) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
    write_graph(out, g);
}

std::string to_graph_text(const OrientedGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace ostar
