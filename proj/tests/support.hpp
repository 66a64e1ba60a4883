#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mscp/qubo.hpp"

namespace testsupport {

/// Bundled-instance directory; tests run from anywhere via MSCP_DATA_DIR.
inline std::string data_dir() {
    if (const char* env = std::getenv("MSCP_DATA_DIR")) return env;
    return "data";
}

inline std::string instance_path(const std::string& name) {
    return data_dir() + "/instances/" + name + ".col";
}

/// The worked-example graph: the 4-cycle 1-2-3-4-1.
inline mscp::Graph four_cycle() {
    return mscp::Graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

/// Full-matrix evaluation of h from coefficient lookups only; deliberately
/// ignorant of the sparse row layout the production evaluator walks.
inline std::int64_t dense_h(const mscp::QuboModel& q, const mscp::Assignment& x) {
    std::int64_t h = q.constant();
    for (int i = 0; i < q.dimension(); ++i) {
        if (!x[i]) continue;
        h += q.diag(i);
        for (int j = i + 1; j < q.dimension(); ++j)
            if (x[j]) h += 2 * q.coeff(i, j);
    }
    return h;
}

inline mscp::Graph random_gnp(int n, double p, std::mt19937_64& gen) {
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(gen)) edges.emplace_back(u, v);
    return mscp::Graph(n, std::move(edges));
}

/// Random symmetric integer matrix, roughly `density` of the off-diagonal
/// pairs nonzero, coefficients in [-bound, bound].
inline mscp::QuboModel random_qubo(int n, double density, std::int64_t bound,
                                   std::mt19937_64& gen) {
    std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
    std::bernoulli_distribution present(density);
    mscp::QuboModel q(n, coeff(gen));
    for (int i = 0; i < n; ++i) q.add_diag(i, coeff(gen));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (present(gen)) q.add_offdiag(i, j, coeff(gen));
    q.finalize();
    return q;
}

inline mscp::Assignment random_assignment(int n, std::mt19937_64& gen) {
    mscp::Assignment x(n);
    for (int i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(gen() & 1u);
    return x;
}

}  // namespace testsupport
