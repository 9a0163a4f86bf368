#include "mec/structure.hpp"

#include <algorithm>

namespace mec {

long long count_triangles(const Skeleton& g) {
    const int n = g.node_count();
    long long total = 0;
    for (int u = 0; u < n; ++u) {
        std::uint32_t higher = g.neighbors(u) >> (u + 1);
        while (higher) {
            const int v = u + 1 + lowest_bit(higher);
            higher &= higher - 1;
            // third node above v keeps each triangle counted once
            const std::uint32_t above_v = ~((1u << (v + 1)) - 1u);
            total += popcount32(g.neighbors(u) & g.neighbors(v) & above_v);
        }
    }
    return total;
}

long long count_induced_3paths(const Skeleton& g) {
    const int n = g.node_count();
    long long total = 0;
    for (int z = 0; z < n; ++z) {
        const std::uint32_t nb = g.neighbors(z);
        const int deg = popcount32(nb);
        long long adjacent_pairs = 0;
        std::uint32_t rest = nb;
        while (rest) {
            const int x = lowest_bit(rest);
            rest &= rest - 1;
            adjacent_pairs += popcount32(g.neighbors(x) & rest);
        }
        total += static_cast<long long>(deg) * (deg - 1) / 2 - adjacent_pairs;
    }
    return total;
}

bool is_triangle_free(const Skeleton& g) { return count_triangles(g) == 0; }

std::uint32_t component_mask(const Skeleton& g, int start, std::uint32_t allowed) {
    std::uint32_t seen = 1u << start;
    std::uint32_t frontier = seen;
    while (frontier) {
        const int v = lowest_bit(frontier);
        frontier &= frontier - 1;
        const std::uint32_t fresh = g.neighbors(v) & allowed & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen;
}

std::vector<std::vector<int>> components(const Skeleton& g) {
    std::vector<std::vector<int>> out;
    std::uint32_t remaining = g.node_mask();
    while (remaining) {
        const int start = lowest_bit(remaining);
        std::uint32_t comp = component_mask(g, start, remaining);
        remaining &= ~comp;
        std::vector<int> nodes;
        while (comp) {
            nodes.push_back(lowest_bit(comp));
            comp &= comp - 1;
        }
        out.push_back(std::move(nodes));
    }
    return out;
}

bool is_connected(const Skeleton& g) {
    return component_mask(g, 0, g.node_mask()) == g.node_mask();
}

StructureSummary structure_summary(const Skeleton& g) {
    StructureSummary s;
    s.edge_count = g.edge_count();
    for (int v = 0; v < g.node_count(); ++v) s.degree_sequence.push_back(g.degree(v));
    std::sort(s.degree_sequence.rbegin(), s.degree_sequence.rend());
    s.triangle_count = count_triangles(g);
    s.induced_3path_count = count_induced_3paths(g);
    s.is_triangle_free = s.triangle_count == 0;
    s.components = components(g);
    s.is_connected = s.components.size() == 1;
    return s;
}

}  // namespace mec
