#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mscp/graph.hpp"

namespace mscp {

/// Binary vector over the x_uk variables.
struct Assignment {
    std::vector<std::uint8_t> bits;

    Assignment() = default;
    explicit Assignment(int n) : bits(n, 0) {}

    int size() const { return static_cast<int>(bits.size()); }
    std::uint8_t operator[](int i) const { return bits[i]; }
    std::uint8_t& operator[](int i) { return bits[i]; }
    bool operator==(const Assignment& o) const { return bits == o.bits; }
};

int hamming_distance(const Assignment& a, const Assignment& b);

/// Per-vertex colors in [1, K], indexed by 0-based vertex.
struct Coloring {
    std::vector<int> colors;

    int size() const { return static_cast<int>(colors.size()); }
};

std::int64_t coloring_sum(const Coloring& c);
bool is_legal_coloring(const Graph& g, const Coloring& c);

/// The color-sum minimization model for (graph, K): one 0/1 variable per
/// (vertex, color) pair with objective weight k, one choose-exactly-one
/// equality per vertex and one conflict inequality per (edge, color) pair.
/// Variables are ordered vertex-major: (u=0,k=1),(u=0,k=2),...
class LinearModel {
public:
    LinearModel(Graph g, int num_colors);

    const Graph& graph() const { return graph_; }
    int num_colors() const { return num_colors_; }
    int num_vars() const { return graph_.vertex_count() * num_colors_; }
    int num_equalities() const { return graph_.vertex_count(); }
    int num_inequalities() const { return graph_.edge_count() * num_colors_; }

    /// Variable index of vertex u (0-based) with color k (1-based).
    int var_index(int u, int k) const { return u * num_colors_ + (k - 1); }
    int var_vertex(int i) const { return i / num_colors_; }
    int var_color(int i) const { return i % num_colors_ + 1; }

    /// Objective coefficient of variable i: its color index.
    std::int64_t objective_coeff(int i) const { return var_color(i); }

private:
    Graph graph_;
    int num_colors_;
};

LinearModel build_linear_model(const Graph& g, int num_colors);

/// The three raw objective pieces evaluated straight from the linear model:
/// f is the color sum term, f1 the equality penalty P*(Ax-b)'(Ax-b), f2 the
/// conflict penalty summed over ordered adjacent pairs. The composite
/// maximize objective is h = -f + f1 + f2.
struct PenaltyComponents {
    std::int64_t f = 0;
    std::int64_t f1 = 0;
    std::int64_t f2 = 0;

    std::int64_t h() const { return -f + f1 + f2; }
};

PenaltyComponents penalty_components(const LinearModel& m, std::int64_t penalty,
                                     const Assignment& x);

/// Outcome of reading a coloring back out of an assignment. Succeeds exactly
/// when every vertex has one set variable and no edge is monochromatic.
struct DecodeResult {
    enum class Status { ok, vertex_multiplicity, edge_conflict };

    Status status = Status::ok;
    Coloring coloring;      // valid only when ok
    std::int64_t sum = 0;   // color sum, valid only when ok
    int bad_vertex = -1;    // 0-based offender for vertex_multiplicity
    int bad_count = 0;      // how many colors that vertex carries
    std::pair<int, int> bad_edge{-1, -1};  // 0-based offender for edge_conflict

    bool ok() const { return status == Status::ok; }
    std::string describe() const;  // 1-based labels
};

DecodeResult decode(const LinearModel& m, const Assignment& x);

}  // namespace mscp
