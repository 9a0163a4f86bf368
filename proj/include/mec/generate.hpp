#pragma once

#include <random>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

/// All 2^C(n,2) labeled graphs on n nodes, by ascending edge mask in the
/// canonical edge order.
std::vector<Skeleton> all_labeled_graphs(int n);

bool are_isomorphic(const Skeleton& a, const Skeleton& b);

/// One representative per isomorphism class, built by vertex extension with
/// invariant-bucketed isomorphism dedup. Deterministic order. Practical up
/// to n = 9 or so; the published class counts (1, 2, 4, 11, 34, 156, 1044,
/// 12346, ... / connected 1, 1, 2, 6, 21, 112, 853, 11117, ...) pin it down
/// in the tests.
std::vector<Skeleton> nonisomorphic_graphs(int n);

std::vector<Skeleton> nonisomorphic_connected_graphs(int n);

// Seeded random instances for the randomized suites.

Skeleton random_graph(std::mt19937& rng, int n, double edge_prob);

Skeleton random_connected_graph(std::mt19937& rng, int n, double edge_prob);

/// Random graph with one edge of every triangle knocked out until none
/// remain.
Skeleton random_triangle_free_graph(std::mt19937& rng, int n, double edge_prob);

}  // namespace mec
