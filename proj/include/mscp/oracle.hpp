#pragma once

#include <cstdint>

#include "mscp/qubo.hpp"

namespace mscp {

/// Exhaustive minimum color sum over all legal K-colorings, enumerated in
/// lexicographic order (vertex 0 outermost, color 1 first); the witness is
/// the first optimum encountered. Partial colorings are pruned on legality
/// and on a bound that cannot discard ties.
/// Throws when K^n exceeds the 1e8 enumeration guard or no legal coloring exists.
struct MscpOracleResult {
    std::int64_t optimum = 0;
    Coloring witness;
    std::int64_t num_optima = 0;
};

MscpOracleResult brute_force_mscp(const Graph& g, int num_colors);

/// Exhaustive maximum of x'Q'x + c over all 2^N binary vectors, enumerated
/// lexicographically with x_0 outermost and 1 before 0; among tied optima the
/// witness is the first encountered. Guard: N <= 24.
struct QuboOracleResult {
    std::int64_t optimum = 0;
    Assignment witness;
    std::int64_t num_optima = 0;
};

QuboOracleResult brute_force_qubo(const QuboModel& q);

/// Exact maximum via enumeration over contiguous variable groups of size
/// `group_size` with a sound suffix bound: each group's best attainable
/// block value (enumerated from the matrix, constant split across groups)
/// plus every positive cross-group contribution. Visits leaves in the same
/// order as brute_force_qubo, so optimum, witness and count match it
/// on any model; the grouping only enables pruning, useful when N > 24 but
/// the blocks are mutually repulsive (as in the penalty transformation).
/// Requires dimension divisible by group_size.
QuboOracleResult max_qubo_grouped(const QuboModel& q, int group_size);

}  // namespace mscp
