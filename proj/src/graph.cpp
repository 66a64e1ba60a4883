#include "mscp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mscp {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : n_(vertex_count) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

DegreeStats degree_stats(const Graph& g) {
    return {g.max_degree(), g.edge_count()};
}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == 'c' || ch == 'C') return true;  // comment marker first token
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;  // blank
}

int parse_int_token(std::istringstream& in, int line_no, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw DimacsError(line_no, std::string("missing ") + what);
    try {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw DimacsError(line_no, "malformed token '" + tok + "' for " + what);
    }
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, declared_m = -1;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "p") {
            if (n >= 0) throw DimacsError(line_no, "duplicate problem line");
            std::string fmt;
            if (!(ls >> fmt) || fmt != "edge")
                throw DimacsError(line_no, "expected 'p edge <n> <m>'");
            n = parse_int_token(ls, line_no, "vertex count");
            declared_m = parse_int_token(ls, line_no, "edge count");
            if (n < 1) throw DimacsError(line_no, "vertex count must be positive");
            if (declared_m < 0) throw DimacsError(line_no, "edge count must be nonnegative");
            edges.reserve(declared_m);
        } else if (kind == "e") {
            if (n < 0) throw DimacsError(line_no, "edge line before problem line");
            int u = parse_int_token(ls, line_no, "edge endpoint");
            int v = parse_int_token(ls, line_no, "edge endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw DimacsError(line_no, "endpoint out of range [1, " + std::to_string(n) + "]");
            if (u == v) throw DimacsError(line_no, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw DimacsError(line_no, "malformed token '" + kind + "'");
        }
    }
    if (n < 0) throw DimacsError(line_no, "missing problem line");
    return Graph(n, std::move(edges));
}

Graph parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace mscp
