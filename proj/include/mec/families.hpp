#pragma once

#include <string>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

Skeleton make_empty(int n);
Skeleton make_path(int n);
Skeleton make_cycle(int n);

/// Star K_{1,p}: center is node 0, leaves 1..p.
Skeleton make_star(int leaves);

Skeleton make_complete(int n);

/// K_{p,q}: side A = 0..p-1, side B = p..p+q-1.
Skeleton make_complete_bipartite(int p, int q);

/// Double star S_2(p,q): edge {0,1} with p leaves on 0 and q leaves on 1.
Skeleton make_double_star(int p, int q);

/// Circulant X(p, C) from the abbreviated connection set (a subset of
/// [1, floor(p/2)]); the additive inverses are filled in internally.
Skeleton make_circulant(int p, const std::vector<int>& connection);

/// The expanded, inverse-closed connection set, sorted. Element p/2 (when
/// present) is its own inverse and appears once.
std::vector<int> expand_connection_set(int p, const std::vector<int>& connection);

/// Nodes of b are relabeled by offset a.node_count().
Skeleton disjoint_union(const Skeleton& a, const Skeleton& b);

Skeleton disjoint_union(const std::vector<Skeleton>& parts);

/// Parse the CLI family mini-grammar: family:param[,param]...
///   path:N  cycle:N  star:P  complete:N  empty:N
///   kpq:P:Q  doublestar:P:Q  circulant:P:c1[,c2,...]
Skeleton make_family(const std::string& spec);

}  // namespace mec
