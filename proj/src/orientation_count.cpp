#include "mec/orientation_count.hpp"

#include <array>

namespace mec {

namespace {

// Working subgraph: adjacency rows over a shrinking node mask. Small enough
// to copy down the recursion.
struct Sub {
    std::array<std::uint32_t, kMaxNodes> adj;
    std::uint32_t nodes;

    int edge_count() const {
        int twice = 0;
        std::uint32_t rest = nodes;
        while (rest) {
            const int v = lowest_bit(rest);
            rest &= rest - 1;
            twice += popcount32(adj[v] & nodes);
        }
        return twice / 2;
    }
};

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

std::uint64_t count_rec(const Sub& g);

// g restricted to one connected component with at least one edge.
std::uint64_t count_component(const Sub& g) {
    const int k = popcount32(g.nodes);
    const int m = g.edge_count();
    if (m == k - 1) return 1ull << m;                        // tree
    if (2 * m == k * (k - 1)) return factorial(k);           // clique
    if (m == k) {                                            // unicyclic
        bool all_deg2 = true;
        std::uint32_t rest = g.nodes;
        while (rest) {
            const int v = lowest_bit(rest);
            rest &= rest - 1;
            if (popcount32(g.adj[v] & g.nodes) != 2) { all_deg2 = false; break; }
        }
        if (all_deg2) return (1ull << m) - 2;                // cycle
    }

    // Pick the edge at the max-degree node (lowest labels on ties).
    int best_u = -1, best_deg = -1;
    std::uint32_t rest = g.nodes;
    while (rest) {
        const int v = lowest_bit(rest);
        rest &= rest - 1;
        const int d = popcount32(g.adj[v] & g.nodes);
        if (d > best_deg) { best_deg = d; best_u = v; }
    }
    int best_v = -1, best_v_deg = -1;
    std::uint32_t nbrs = g.adj[best_u] & g.nodes;
    while (nbrs) {
        const int v = lowest_bit(nbrs);
        nbrs &= nbrs - 1;
        const int d = popcount32(g.adj[v] & g.nodes);
        if (d > best_v_deg) { best_v_deg = d; best_v = v; }
    }

    Sub deleted = g;
    deleted.adj[best_u] &= ~(1u << best_v);
    deleted.adj[best_v] &= ~(1u << best_u);

    Sub contracted = deleted;  // merge best_v into best_u
    contracted.adj[best_u] |= contracted.adj[best_v] & contracted.nodes;
    contracted.adj[best_u] &= ~(1u << best_u);
    std::uint32_t v_nbrs = contracted.adj[best_v] & contracted.nodes;
    while (v_nbrs) {
        const int w = lowest_bit(v_nbrs);
        v_nbrs &= v_nbrs - 1;
        contracted.adj[w] = (contracted.adj[w] & ~(1u << best_v)) | (1u << best_u);
    }
    contracted.adj[best_u] &= ~(1u << best_v);
    contracted.nodes &= ~(1u << best_v);

    return count_rec(deleted) + count_rec(contracted);
}

std::uint64_t count_rec(const Sub& g) {
    std::uint64_t product = 1;
    std::uint32_t remaining = g.nodes;
    while (remaining) {
        const int start = lowest_bit(remaining);
        if ((g.adj[start] & g.nodes) == 0) {  // isolated node: 1 orientation
            remaining &= ~(1u << start);
            continue;
        }
        std::uint32_t comp = 1u << start, frontier = comp;
        while (frontier) {
            const int v = lowest_bit(frontier);
            frontier &= frontier - 1;
            const std::uint32_t fresh = g.adj[v] & g.nodes & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        remaining &= ~comp;
        Sub piece = g;
        piece.nodes = comp;
        product *= count_component(piece);
    }
    return product;
}

}  // namespace

std::uint64_t acyclic_orientation_count(const Skeleton& g, int edge_budget) {
    const int m = g.edge_count();
    if (m > edge_budget)
        throw BudgetExceeded("acyclic_orientation_count: " + std::to_string(m) +
                                 " edges exceed budget of " + std::to_string(edge_budget),
                             0);
    Sub sub{};
    sub.nodes = g.node_mask();
    for (int v = 0; v < g.node_count(); ++v) sub.adj[v] = g.neighbors(v);
    return count_rec(sub);
}

}  // namespace mec
