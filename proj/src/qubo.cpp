#include "mscp/qubo.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mscp {

QuboModel::QuboModel(int dimension, std::int64_t constant, std::int64_t penalty)
    : n_(dimension), diag_(dimension, 0), rows_(dimension), constant_(constant),
      penalty_(penalty) {
    if (dimension < 1) throw std::invalid_argument("QUBO dimension must be positive");
}

void QuboModel::add_offdiag(int i, int j, std::int64_t v) {
    if (i == j) throw std::invalid_argument("diagonal entry passed to add_offdiag");
    rows_[i].push_back({static_cast<std::int32_t>(j), v});
    rows_[j].push_back({static_cast<std::int32_t>(i), v});
}

void QuboModel::finalize() {
    for (auto& row : rows_) {
        std::sort(row.begin(), row.end(),
                  [](const QuboEntry& a, const QuboEntry& b) { return a.col < b.col; });
        // merge duplicate coordinates, drop exact zeros
        std::size_t out = 0;
        for (std::size_t i = 0; i < row.size();) {
            std::int64_t sum = 0;
            std::size_t j = i;
            while (j < row.size() && row[j].col == row[i].col) sum += row[j++].val;
            if (sum != 0) row[out++] = {row[i].col, sum};
            i = j;
        }
        row.resize(out);
    }
}

std::int64_t QuboModel::coeff(int i, int j) const {
    if (i == j) return diag_[i];
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const QuboEntry& e, int col) { return e.col < col; });
    return (it != row.end() && it->col == j) ? it->val : 0;
}

std::int64_t QuboModel::offdiag_pair_count() const {
    std::int64_t entries = 0;
    for (const auto& row : rows_) entries += static_cast<std::int64_t>(row.size());
    return entries / 2;
}

void check_qubo_bounds(std::int64_t num_vars, std::int64_t max_abs_coeff) {
    const __int128 worst = static_cast<__int128>(num_vars) * num_vars * max_abs_coeff;
    if (worst > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("QUBO coefficients exceed the 64-bit evaluation bound");
}

QuboModel to_qubo(const LinearModel& m, std::int64_t penalty) {
    const int k_count = m.num_colors();
    if (penalty >= 0) throw std::invalid_argument("penalty scalar must be negative");
    // |P| strictly larger than half of the maximum color
    if (2 * (-penalty) <= k_count)
        throw std::invalid_argument("|penalty| must exceed half the maximum color (K/2)");

    const int n_vars = m.num_vars();
    check_qubo_bounds(n_vars, std::max<std::int64_t>(-penalty, k_count - penalty));

    const int n = m.graph().vertex_count();
    QuboModel q(n_vars, penalty * static_cast<std::int64_t>(n), penalty);

    // -f(x) and the expanded equality penalty P(sum_k x_uk - 1)^2:
    // with x^2 = x the diagonal of (u,k) collects -k - P and every
    // same-vertex pair (k < l) a symmetric off-diagonal P.
    for (int u = 0; u < n; ++u) {
        for (int k = 1; k <= k_count; ++k) {
            q.add_diag(m.var_index(u, k), -static_cast<std::int64_t>(k) - penalty);
            for (int l = k + 1; l <= k_count; ++l)
                q.add_offdiag(m.var_index(u, k), m.var_index(u, l), penalty);
        }
    }

    // conflict penalties: symmetric P per (edge, color), worth 2P in the form
    for (auto [u, v] : m.graph().edges())
        for (int k = 1; k <= k_count; ++k)
            q.add_offdiag(m.var_index(u, k), m.var_index(v, k), penalty);

    q.finalize();
    return q;
}

std::int64_t eval_h(const QuboModel& q, const Assignment& x) {
    if (x.size() != q.dimension()) throw std::invalid_argument("assignment length mismatch");
    std::int64_t total = 0;
    for (int i = 0; i < q.dimension(); ++i) {
        if (!x[i]) continue;
        std::int64_t row = q.diag(i);
        for (const auto& e : q.row(i))
            if (x[e.col]) row += e.val;  // both directions stored: counts 2*q_ij overall
        total += row;
    }
    return total + q.constant();
}

std::int64_t flip_gain(const QuboModel& q, const Assignment& x, int i) {
    std::int64_t s = q.diag(i);
    for (const auto& e : q.row(i))
        if (x[e.col]) s += 2 * e.val;
    return x[i] ? -s : s;
}

void write_qubo(const QuboModel& q, std::ostream& out) {
    out << q.dimension() << ' ' << q.constant() << '\n';
    for (int i = 0; i < q.dimension(); ++i) {
        if (q.diag(i) != 0) out << i + 1 << ' ' << i + 1 << ' ' << q.diag(i) << '\n';
        for (const auto& e : q.row(i))
            if (e.col > i) out << i + 1 << ' ' << e.col + 1 << ' ' << e.val << '\n';
    }
}

QuboModel read_qubo(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty QUBO stream");
    std::istringstream header(line);
    int n;
    std::int64_t constant;
    if (!(header >> n >> constant)) throw std::runtime_error("malformed QUBO header");
    QuboModel q(n, constant);
    int i, j;
    std::int64_t v;
    while (in >> i >> j >> v) {
        if (i < 1 || j < 1 || i > n || j > n) throw std::runtime_error("QUBO index out of range");
        if (i == j)
            q.add_diag(i - 1, v);
        else
            q.add_offdiag(i - 1, j - 1, v);
    }
    q.finalize();
    return q;
}

}  // namespace mscp
