#include "mscp/model.hpp"

#include <stdexcept>

namespace mscp {

int hamming_distance(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size()) throw std::invalid_argument("assignment length mismatch");
    int d = 0;
    for (int i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::int64_t coloring_sum(const Coloring& c) {
    std::int64_t s = 0;
    for (int k : c.colors) s += k;
    return s;
}

bool is_legal_coloring(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count()) return false;
    for (int k : c.colors)
        if (k < 1) return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

LinearModel::LinearModel(Graph g, int num_colors)
    : graph_(std::move(g)), num_colors_(num_colors) {
    if (num_colors_ < 1) throw std::invalid_argument("need at least one color");
}

LinearModel build_linear_model(const Graph& g, int num_colors) {
    return LinearModel(g, num_colors);
}

PenaltyComponents penalty_components(const LinearModel& m, std::int64_t penalty,
                                     const Assignment& x) {
    if (x.size() != m.num_vars()) throw std::invalid_argument("assignment length mismatch");
    const int k_count = m.num_colors();
    PenaltyComponents out;

    for (int i = 0; i < x.size(); ++i)
        if (x[i]) out.f += m.objective_coeff(i);

    // f1 = P * sum_u (sum_k x_uk - 1)^2
    for (int u = 0; u < m.graph().vertex_count(); ++u) {
        std::int64_t row = 0;
        for (int k = 1; k <= k_count; ++k) row += x[m.var_index(u, k)];
        out.f1 += penalty * (row - 1) * (row - 1);
    }

    // f2 sums over ordered adjacent pairs, so each conflict contributes twice.
    for (auto [u, v] : m.graph().edges())
        for (int k = 1; k <= k_count; ++k)
            if (x[m.var_index(u, k)] && x[m.var_index(v, k)]) out.f2 += 2 * penalty;

    return out;
}

std::string DecodeResult::describe() const {
    switch (status) {
        case Status::ok:
            return "feasible, color sum " + std::to_string(sum);
        case Status::vertex_multiplicity:
            return "vertex " + std::to_string(bad_vertex + 1) + " carries " +
                   std::to_string(bad_count) + " colors";
        case Status::edge_conflict:
            return "edge (" + std::to_string(bad_edge.first + 1) + ", " +
                   std::to_string(bad_edge.second + 1) + ") is monochromatic";
    }
    return {};
}

DecodeResult decode(const LinearModel& m, const Assignment& x) {
    if (x.size() != m.num_vars()) throw std::invalid_argument("assignment length mismatch");
    DecodeResult res;
    res.coloring.colors.assign(m.graph().vertex_count(), 0);

    for (int u = 0; u < m.graph().vertex_count(); ++u) {
        int count = 0, color = 0;
        for (int k = 1; k <= m.num_colors(); ++k) {
            if (x[m.var_index(u, k)]) {
                ++count;
                color = k;
            }
        }
        if (count != 1) {
            res.status = DecodeResult::Status::vertex_multiplicity;
            res.bad_vertex = u;
            res.bad_count = count;
            return res;
        }
        res.coloring.colors[u] = color;
    }
    for (auto [u, v] : m.graph().edges()) {
        if (res.coloring.colors[u] == res.coloring.colors[v]) {
            res.status = DecodeResult::Status::edge_conflict;
            res.bad_edge = {u, v};
            return res;
        }
    }
    res.sum = coloring_sum(res.coloring);
    return res;
}

}  // namespace mscp
