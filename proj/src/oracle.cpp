#include "mscp/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace mscp {

namespace {

constexpr std::int64_t kMscpLeafGuard = 100'000'000;  // K^n ceiling
constexpr int kQuboVarGuard = 24;                     // 2^N ceiling

struct MscpSearch {
    const Graph& g;
    int num_colors;
    int n;
    std::vector<int> colors;  // 0 = unassigned
    std::int64_t partial = 0;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<int> witness{};
    std::int64_t count = 0;

    void dfs(int u) {
        if (u == n) {
            if (partial < best) {
                best = partial;
                witness = colors;
                count = 1;
            } else if (partial == best) {
                ++count;
            }
            return;
        }
        // every uncolored vertex still costs at least 1; equality survives
        if (partial + (n - u) > best) return;
        for (int k = 1; k <= num_colors; ++k) {
            if (partial + k + (n - u - 1) > best) break;  // colors ascend
            bool ok = true;
            for (int v : g.neighbors(u)) {
                if (colors[v] == k) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colors[u] = k;
            partial += k;
            dfs(u + 1);
            partial -= k;
            colors[u] = 0;
        }
    }
};

}  // namespace

MscpOracleResult brute_force_mscp(const Graph& g, int num_colors) {
    if (num_colors < 1) throw std::invalid_argument("color count must be positive");
    std::int64_t leaves = 1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        leaves *= num_colors;
        if (leaves > kMscpLeafGuard)
            throw std::invalid_argument("instance too large for exhaustive coloring");
    }

    MscpSearch search{.g = g,
                      .num_colors = num_colors,
                      .n = g.vertex_count(),
                      .colors = std::vector<int>(g.vertex_count(), 0)};
    search.dfs(0);
    if (search.count == 0)
        throw std::runtime_error("no legal coloring with " + std::to_string(num_colors) +
                                 " colors");
    return {search.best, Coloring{std::move(search.witness)}, search.count};
}

namespace {

struct QuboSearch {
    const QuboModel& q;
    int n;
    Assignment x{};
    std::int64_t h;  // value of the current partial (unset variables are 0)
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    Assignment witness{};
    std::int64_t count = 0;

    void dfs(int i) {
        if (i == n) {
            if (h > best) {
                best = h;
                witness = x;
                count = 1;
            } else if (h == best) {
                ++count;
            }
            return;
        }
        std::int64_t delta = q.diag(i);
        for (const auto& e : q.row(i))
            if (e.col < i && x[e.col]) delta += 2 * e.val;
        x[i] = 1;  // x_i = 1 first: the printed witness convention
        h += delta;
        dfs(i + 1);
        h -= delta;
        x[i] = 0;
        dfs(i + 1);
    }
};

}  // namespace

QuboOracleResult brute_force_qubo(const QuboModel& q) {
    if (q.dimension() > kQuboVarGuard)
        throw std::invalid_argument("matrix too large for exhaustive enumeration");
    QuboSearch search{.q = q,
                      .n = q.dimension(),
                      .x = Assignment(q.dimension()),
                      .h = q.constant()};
    search.dfs(0);
    return {search.best, std::move(search.witness), search.count};
}

namespace {

struct GroupedSearch {
    const QuboModel& q;
    int k;           // variables per group
    int num_groups;
    std::vector<std::vector<std::int64_t>> block{};  // [group][mask] value incl. split constant
    std::vector<std::int64_t> suffix_bound{};      // groups g.. : best blocks + positive crosses
    Assignment x{};
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    Assignment witness{};
    std::int64_t count = 0;

    // bit t of a mask maps to variable base+t with x_{base} most significant,
    // so counting masks downward walks assignments in the exhaustive
    // enumeration's 1-before-0 order
    int var_of(int group, int t) const { return group * k + t; }
    bool mask_bit(unsigned mask, int t) const { return (mask >> (k - 1 - t)) & 1u; }

    void dfs(int g, std::int64_t value) {
        if (g == num_groups) {
            if (value > best) {
                best = value;
                witness = x;
                count = 1;
            } else if (value == best) {
                ++count;
            }
            return;
        }
        if (value + suffix_bound[g] < best) return;  // equality survives
        const unsigned mask_count = 1u << k;
        for (unsigned m1 = mask_count; m1 > 0; --m1) {
            const unsigned mask = m1 - 1;  // descending: 1-before-0, matching brute force
            std::int64_t v = value + block[g][mask];
            for (int t = 0; t < k; ++t) {
                if (!mask_bit(mask, t)) continue;
                const int i = var_of(g, t);
                x[i] = 1;
                for (const auto& e : q.row(i))
                    if (e.col < g * k && x[e.col]) v += 2 * e.val;
            }
            dfs(g + 1, v);
            for (int t = 0; t < k; ++t)
                if (mask_bit(mask, t)) x[var_of(g, t)] = 0;
        }
    }
};

}  // namespace

QuboOracleResult max_qubo_grouped(const QuboModel& q, int group_size) {
    const int n = q.dimension();
    if (group_size < 1 || group_size > 20)
        throw std::invalid_argument("group size out of range");
    if (n % group_size != 0)
        throw std::invalid_argument("dimension not divisible by group size");

    GroupedSearch search{.q = q, .k = group_size, .num_groups = n / group_size};
    search.x = Assignment(n);

    // split the constant across groups so the block values sum exactly to h
    const int G = search.num_groups;
    std::vector<std::int64_t> split(std::max(G, 1), 0);
    if (G > 0) {
        const std::int64_t base = q.constant() / G;
        std::int64_t rem = q.constant() - base * G;
        for (int g = 0; g < G; ++g) split[g] = base;
        for (int g = 0; rem != 0; ++g) {
            split[g] += rem > 0 ? 1 : -1;
            rem += rem > 0 ? -1 : 1;
        }
    } else if (q.constant() != 0) {
        // zero-dimension model: the lone leaf is the constant itself
        return {q.constant(), Assignment(0), 1};
    }

    const int k = group_size;
    search.block.assign(G, std::vector<std::int64_t>(std::size_t{1} << k, 0));
    std::vector<std::int64_t> group_best(G, std::numeric_limits<std::int64_t>::min());
    for (int g = 0; g < G; ++g) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::int64_t v = split[g];
            for (int t = 0; t < k; ++t) {
                if (!search.mask_bit(mask, t)) continue;
                const int i = search.var_of(g, t);
                v += q.diag(i);
                for (int s = t + 1; s < k; ++s)
                    if (search.mask_bit(mask, s)) v += 2 * q.coeff(i, search.var_of(g, s));
            }
            search.block[g][mask] = v;
            group_best[g] = std::max(group_best[g], v);
        }
    }

    // positive cross-group pairs touching any group >= g can only help
    std::vector<std::int64_t> cross_pos(G + 1, 0);
    for (int i = 0; i < n; ++i) {
        for (const auto& e : q.row(i)) {
            if (e.col <= i) continue;
            const int gi = i / k, gj = e.col / k;
            if (gi == gj || e.val <= 0) continue;
            cross_pos[std::max(gi, gj)] += 2 * e.val;
        }
    }
    search.suffix_bound.assign(G + 1, 0);
    for (int g = G - 1; g >= 0; --g)
        search.suffix_bound[g] = search.suffix_bound[g + 1] + group_best[g];
    std::int64_t tail_pos = 0;
    for (int g = G - 1; g >= 0; --g) {
        tail_pos += cross_pos[g];
        search.suffix_bound[g] += tail_pos;
    }

    search.dfs(0, 0);
    return {search.best, std::move(search.witness), search.count};
}

}  // namespace mscp
