#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

// Default per-skeleton orientation budget. Dense 12-node skeletons overflow
// any desk budget; refusal is explicit, never a partial result.
inline constexpr std::uint64_t kDefaultOrientationBudget = 1ull << 28;

/// Enumerate acyclic orientations of g in a deterministic order derived from
/// the canonical edge order: edges are oriented one at a time (low-to-high
/// endpoint first) and a branch is abandoned the moment it would close a
/// directed cycle, so no cyclic orientation is ever materialized. Every
/// partial acyclic orientation extends to a full one, which keeps the search
/// tree within |E| times the output size.
///
/// The visitor receives a const Dag& owned and reused by the enumerator
/// (copy it to keep it) and returns false to stop early. Returns the number
/// of DAGs visited. Throws BudgetExceeded (reached() == budget) on the first
/// DAG past the budget.
template <class Visitor>
std::uint64_t for_each_acyclic_orientation_while(const Skeleton& g, std::uint64_t budget,
                                                 Visitor&& visit) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());

    Dag dag{g, {}};
    std::array<std::uint32_t, kMaxNodes> out{};
    std::uint64_t count = 0;
    bool stopped = false;

    // Directed path src ~> dst over the edges oriented so far?
    auto reaches = [&](int src, int dst) {
        std::uint32_t seen = 1u << src, frontier = seen;
        const std::uint32_t target = 1u << dst;
        while (frontier) {
            const int v = lowest_bit(frontier);
            frontier &= frontier - 1;
            const std::uint32_t fresh = out[v] & ~seen;
            if (fresh & target) return true;
            seen |= fresh;
            frontier |= fresh;
        }
        return false;
    };

    auto rec = [&](auto&& self, int idx) -> void {
        if (stopped) return;
        if (idx == m) {
            if (count == budget)
                throw BudgetExceeded("orientation budget of " + std::to_string(budget) +
                                         " exceeded",
                                     count);
            ++count;
            if (!visit(static_cast<const Dag&>(dag))) stopped = true;
            return;
        }
        const auto [a, b] = edges[idx];
        if (!reaches(b, a)) {  // a -> b
            out[a] |= 1u << b;
            dag.parents[b] |= 1u << a;
            self(self, idx + 1);
            out[a] &= ~(1u << b);
            dag.parents[b] &= ~(1u << a);
        }
        if (stopped) return;
        if (!reaches(a, b)) {  // b -> a
            out[b] |= 1u << a;
            dag.parents[a] |= 1u << b;
            self(self, idx + 1);
            out[b] &= ~(1u << a);
            dag.parents[a] &= ~(1u << b);
        }
    };
    rec(rec, 0);
    return count;
}

/// As above, with a visitor that never stops: yields every acyclic
/// orientation exactly once; the return value equals the acyclic orientation
/// count.
template <class Visitor>
std::uint64_t for_each_acyclic_orientation(const Skeleton& g, std::uint64_t budget,
                                           Visitor&& visit) {
    return for_each_acyclic_orientation_while(g, budget, [&](const Dag& d) {
        visit(d);
        return true;
    });
}

/// Testing oracle: walk all 2^|E| orientations and keep the acyclic ones.
/// Requires |E| <= 20. Same visitor contract as for_each_acyclic_orientation.
template <class Visitor>
std::uint64_t for_each_orientation_brute_force(const Skeleton& g, Visitor&& visit) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > 20)
        throw BudgetExceeded("brute-force orientation filter limited to 20 edges, got " +
                                 std::to_string(m),
                             0);

    Dag dag{g, {}};
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        dag.parents = {};
        for (int i = 0; i < m; ++i) {
            const auto [a, b] = edges[i];
            if ((mask >> i) & 1ull)
                dag.parents[a] |= 1u << b;  // b -> a
            else
                dag.parents[b] |= 1u << a;  // a -> b
        }
        if (dag.is_acyclic()) {
            ++count;
            visit(static_cast<const Dag&>(dag));
        }
    }
    return count;
}

/// Materialized convenience for tests and small graphs.
std::vector<Dag> enumerate_acyclic_orientations(const Skeleton& g,
                                                std::uint64_t budget = kDefaultOrientationBudget);

std::vector<Dag> brute_force_orientations(const Skeleton& g);

}  // namespace mec
