#pragma once

#include <cstdint>

#include "mec/graph.hpp"

namespace mec {

inline constexpr int kDefaultCountEdgeBudget = 48;

/// Exact number of acyclic orientations of g, by deletion-contraction with
/// forest / cycle / clique shortcuts. This equals |chi_G(-1)| and serves as
/// the independent cross-check that census class sizes sum correctly.
/// Throws BudgetExceeded when |E| exceeds edge_budget.
std::uint64_t acyclic_orientation_count(const Skeleton& g,
                                        int edge_budget = kDefaultCountEdgeBudget);

}  // namespace mec
