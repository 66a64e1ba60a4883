#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mscp {

/// Parse failure in a DIMACS .col stream; carries the 1-based line number.
class DimacsError : public std::runtime_error {
public:
    DimacsError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Undirected simple graph. Vertices are 0-based internally; the DIMACS
/// boundary (parser, writer, reports) converts to the 1-based convention.
/// Immutable after construction, safe to share across solver runs.
class Graph {
public:
    Graph() = default;

    /// Builds from 0-based endpoint pairs. Duplicate and reversed duplicate
    /// edges collapse to one; self-loops and out-of-range endpoints throw.
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Deduplicated edge list, 0-based, each pair with u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// 0-based neighbor list, sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct DegreeStats {
    int max_degree = 0;
    int edge_count = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Reads a DIMACS .col stream: 'c' comment lines, exactly one
/// 'p edge <n> <m>' line before any 'e <u> <v>' line, 1-based endpoints.
/// The declared edge count is not trusted; the deduplicated count is.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_file(const std::string& path);

/// Emits 'p edge n m' plus one 'e u v' line per edge, 1-based, sorted.
void write_dimacs(const Graph& g, std::ostream& out);

}  // namespace mscp
