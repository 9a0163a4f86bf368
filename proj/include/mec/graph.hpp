#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mec {

// Hard node cap: adjacency rows and node sets are single 32-bit masks, and
// every count stays exact in 64 bits under the enumeration budgets.
inline constexpr int kMaxNodes = 31;

using Edge = std::pair<int, int>;  // always (min, max)

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

inline int popcount32(std::uint32_t m) { return std::popcount(m); }

inline int lowest_bit(std::uint32_t m) { return std::countr_zero(m); }

/// Undirected simple graph on nodes 0..n-1, one adjacency bitmask per node.
/// Immutable by convention once built; cheap to copy.
class Skeleton {
public:
    Skeleton() = default;

    explicit Skeleton(int n) : n_(n) {
        if (n < 1 || n > kMaxNodes)
            throw std::invalid_argument("node count " + std::to_string(n) +
                                        " outside [1, " + std::to_string(kMaxNodes) + "]");
    }

    int node_count() const { return n_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }

    std::uint32_t neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return popcount32(adj_[v]); }

    std::uint32_t node_mask() const {
        return n_ == 32 ? ~0u : (1u << n_) - 1u;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    /// Edges in the canonical order: lexicographic on (min endpoint, max endpoint).
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (int u = 0; u < n_; ++u) {
            std::uint32_t higher = adj_[u] >> (u + 1);
            while (higher) {
                int v = u + 1 + lowest_bit(higher);
                higher &= higher - 1;
                out.push_back({u, v});
            }
        }
        return out;
    }

    bool operator==(const Skeleton&) const = default;

private:
    int n_ = 1;
    std::array<std::uint32_t, kMaxNodes> adj_{};
};

using ParentArray = std::array<std::uint32_t, kMaxNodes>;

/// An orientation of a Skeleton: parents[v] holds the in-neighbors of v.
/// Acyclicity is an invariant of everything this project produces; it is
/// checked by is_acyclic() in tests, not on the hot path.
struct Dag {
    Skeleton skeleton;
    ParentArray parents{};

    std::uint32_t parent_mask(int v) const { return parents[v]; }

    int indegree(int v) const { return popcount32(parents[v]); }

    bool has_arrow(int tail, int head) const { return (parents[head] >> tail) & 1u; }

    /// Arrows as (tail, head), ordered by underlying edge.
    std::vector<Edge> arrows() const {
        std::vector<Edge> out;
        for (auto [u, v] : skeleton.edges())
            out.push_back(has_arrow(u, v) ? Edge{u, v} : Edge{v, u});
        return out;
    }

    /// Every skeleton edge oriented exactly one way, nothing else set.
    bool orientation_matches_skeleton() const {
        for (int v = 0; v < skeleton.node_count(); ++v) {
            if (parents[v] & ~skeleton.neighbors(v)) return false;
            for (int u = v + 1; u < skeleton.node_count(); ++u) {
                bool uv = (parents[v] >> u) & 1u;
                bool vu = (parents[u] >> v) & 1u;
                if (skeleton.has_edge(u, v) ? (uv == vu) : (uv || vu)) return false;
            }
        }
        return true;
    }

    bool is_acyclic() const {
        const int n = skeleton.node_count();
        std::uint32_t remaining = skeleton.node_mask();
        while (remaining) {
            std::uint32_t removable = 0;
            for (int v = 0; v < n; ++v)
                if ((remaining >> v & 1u) && (parents[v] & remaining) == 0)
                    removable |= 1u << v;
            if (!removable) return false;
            remaining &= ~removable;
        }
        return true;
    }

    bool operator==(const Dag&) const = default;
};

/// Thrown when an enumeration would exceed its budget; reached() tells the
/// caller how far it got, so "too big" is distinguishable from "done".
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t reached)
        : std::runtime_error(what), reached_(reached) {}

    std::uint64_t reached() const { return reached_; }

private:
    std::uint64_t reached_;
};

}  // namespace mec
