#pragma once

#include <cstdint>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

struct StructureSummary {
    std::vector<int> degree_sequence;  // sorted descending
    int edge_count = 0;
    long long triangle_count = 0;
    long long induced_3path_count = 0;
    bool is_triangle_free = true;
    bool is_connected = true;
    std::vector<std::vector<int>> components;  // node lists, ordered by least node

    bool operator==(const StructureSummary&) const = default;
};

StructureSummary structure_summary(const Skeleton& g);

long long count_triangles(const Skeleton& g);

/// Unordered triples (x, z, y) with x~z, y~z, x!~y: the induced 3-paths,
/// which are exactly the possible immorality positions.
long long count_induced_3paths(const Skeleton& g);

bool is_triangle_free(const Skeleton& g);

std::vector<std::vector<int>> components(const Skeleton& g);

bool is_connected(const Skeleton& g);

/// Connected component of `start` within `allowed`, as a node mask.
std::uint32_t component_mask(const Skeleton& g, int start, std::uint32_t allowed);

}  // namespace mec
