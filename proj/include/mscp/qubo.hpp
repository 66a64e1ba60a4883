#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mscp/model.hpp"

namespace mscp {

struct QuboEntry {
    std::int32_t col;
    std::int64_t val;
};

/// Symmetric integer matrix Q' plus additive constant for the maximize-form
/// problem max x'Q'x + c over binary x, with x'Q'x expanded as
/// sum_i q_ii x_i + 2 * sum_{i<j} q_ij x_i x_j. Off-diagonal entries are
/// stored sparsely per row, both directions, sorted by column.
class QuboModel {
public:
    QuboModel(int dimension, std::int64_t constant, std::int64_t penalty = 0);

    int dimension() const { return n_; }
    std::int64_t constant() const { return constant_; }
    std::int64_t penalty() const { return penalty_; }

    std::int64_t diag(int i) const { return diag_[i]; }
    const std::vector<QuboEntry>& row(int i) const { return rows_[i]; }

    /// Off-diagonal coefficient lookup by binary search; 0 when absent.
    std::int64_t coeff(int i, int j) const;

    /// Number of unordered off-diagonal pairs with a nonzero coefficient.
    std::int64_t offdiag_pair_count() const;

    void add_diag(int i, std::int64_t v) { diag_[i] += v; }
    /// Adds v at (i, j) and (j, i). Call finalize() once all entries are in.
    void add_offdiag(int i, int j, std::int64_t v);
    /// Sorts rows and merges duplicate coordinates.
    void finalize();

private:
    int n_;
    std::vector<std::int64_t> diag_;
    std::vector<std::vector<QuboEntry>> rows_;
    std::int64_t constant_;
    std::int64_t penalty_;
};

/// Folds the linear model into the maximize-form QUBO: the negated color sum
/// on the diagonal, the choose-one equalities as P*(sum_k x_uk - 1)^2 per
/// vertex, and each conflict (u,v,k) as a symmetric off-diagonal P (worth 2P
/// in the quadratic form, matching the ordered-pair penalty sum).
/// Requires P < 0 and |P| strictly larger than half the maximum color.
QuboModel to_qubo(const LinearModel& m, std::int64_t penalty);

/// Guards N^2 * max|coefficient| against the 64-bit signed bound.
void check_qubo_bounds(std::int64_t num_vars, std::int64_t max_abs_coeff);

std::int64_t eval_h(const QuboModel& q, const Assignment& x);

/// Exact change in h if x_i is flipped.
std::int64_t flip_gain(const QuboModel& q, const Assignment& x, int i);

/// Sparse text export: header line `<N> <constant>`, then one `i j q_ij`
/// triple per line (1-based, i <= j, diagonal included).
void write_qubo(const QuboModel& q, std::ostream& out);
QuboModel read_qubo(std::istream& in);

}  // namespace mscp
