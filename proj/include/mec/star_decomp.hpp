#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mec/graph.hpp"
#include "mec/orientations.hpp"

#include "json.hpp"

namespace mec {

/// K_{1,|leaves|} inside a host skeleton; |leaves| = 0 is the trivial star.
struct Star {
    int center = 0;
    std::uint32_t leaves = 0;

    int size() const { return popcount32(leaves); }
    bool trivial() const { return leaves == 0; }
    bool operator==(const Star&) const = default;
};

/// A partition of the host's edges into stars (edge {u,v} belongs to a star
/// iff one endpoint is its center and the other a leaf).
struct StarDecomposition {
    Skeleton host;
    std::vector<Star> stars;

    std::uint32_t center_mask() const {
        std::uint32_t m = 0;
        for (const auto& s : stars) m |= 1u << s.center;
        return m;
    }
    int star_count() const { return static_cast<int>(stars.size()); }
    bool operator==(const StarDecomposition&) const = default;
};

struct VertexCover {
    Skeleton host;
    std::uint32_t nodes = 0;

    int size() const { return popcount32(nodes); }
    std::vector<int> node_list() const;
    bool operator==(const VertexCover&) const = default;
};

bool covers_all_edges(const Skeleton& g, std::uint32_t nodes);

/// Every host edge in exactly one star, all leaves adjacent to their center.
bool is_valid_partition(const StarDecomposition& s);

/// Star decompositions compare as edge partitions: a single-edge star is the
/// same subgraph whichever endpoint is called its center.
using EdgePartition = std::vector<std::vector<Edge>>;
EdgePartition canonical_partition(const StarDecomposition& s);

int minimum_vertex_cover_size(const Skeleton& g);

int max_independent_set_size(const Skeleton& g);

/// Every cover of minimum size, sorted by ascending node mask.
std::vector<VertexCover> minimum_vertex_covers(const Skeleton& g);

/// Stars centered exactly at the cover's nodes (trivial stars allowed); each
/// edge goes to its earliest covering center in center_order.
StarDecomposition decomposition_from_cover(const Skeleton& g, const VertexCover& cover,
                                           const std::vector<int>& center_order);

/// One star per node, leaves = the tails of the arrows into it.
StarDecomposition induced_decomposition(const Dag& d);

/// Same partition with the trivial stars dropped.
StarDecomposition reduce(const StarDecomposition& s);

/// Star sizes sorted descending, zero-padded to length m (m >= star count).
std::vector<int> size_vector(const StarDecomposition& s, int m);

class DagifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Orient every star into its center, then repeatedly make a sink of the
/// highest-host-degree node lying on a directed cycle (ties to the lowest
/// label), never picking inside the closed neighborhood of a previous pick.
/// The result is acyclic and the center set of its reduced induced
/// decomposition is contained in the input's. Throws DagifyError if the
/// exclusion rule exhausts the cycle nodes while cycles remain; that case is
/// reported, never silently relaxed.
Dag dagify(const StarDecomposition& s);

/// True iff some DAG on the host induces (after reduction) the same edge
/// partition as reduce(s). Decided by exhaustive DAG enumeration.
bool is_induced_by_some_dag(const StarDecomposition& s,
                            std::uint64_t budget = kDefaultOrientationBudget);

inline constexpr std::uint64_t kDefaultDecompositionBudget = 1ull << 22;

/// All minimum star decompositions, each exactly once (as edge partitions):
/// the decompositions whose center set is a minimum vertex cover, enumerated
/// as covers x edge assignments.
std::vector<StarDecomposition> enumerate_min_star_decompositions(
    const Skeleton& g, std::uint64_t budget = kDefaultDecompositionBudget);

struct StructuralImmoralityNumber {
    enum class Applicability { applicable, not_applicable, unknown };
    Applicability applicability = Applicability::unknown;
    std::optional<long long> value;
    std::optional<StarDecomposition> witness;
    std::string note;

    bool applicable() const { return applicability == Applicability::applicable; }
};

/// m(G) = sum of C(|S_i|, 2) over any minimum star decomposition, valid when
/// the host is triangle-free and all its minimum star decompositions share
/// one sorted size vector (size-uniform star forests are isomorphic).
/// A blown enumeration budget yields `unknown`, distinct from not applicable.
StructuralImmoralityNumber structural_immorality_number(
    const Skeleton& g, std::uint64_t budget = kDefaultDecompositionBudget);

struct ClosedFormResult {
    std::optional<long long> value;
    std::string violated_hypothesis;  // empty when value holds
};

long long star_immorality_number(int p);                    // K_{1,p}: C(p,2)
long long k2p_immorality_number(int p);                     // K_{2,p}: 2 C(p,2)
long long double_star_pp_immorality_number(int p);          // S_2(p,p): C(p+1,2) + C(p,2)
long long kpp_immorality_number(int p);                     // K_{p,p}: p C(p,2)

/// Circulant X(p, C), abbreviated connection set. Hypotheses are checked,
/// not assumed: p even; triangle-free; some expanded element is a unit mod p
/// (so the graph contains a p-cycle); maximum independent set size exactly
/// p/2 (computed exactly). Value: (p/2) * C(degree, 2).
ClosedFormResult circulant_immorality_number(int p, const std::vector<int>& connection);

/// Dispatcher: family in {star, k2p, doublestar_pp, kpp, circulant};
/// params = [p] or [p, c1, c2, ...] for circulant.
ClosedFormResult closed_form_immorality_number(const std::string& family,
                                               const std::vector<int>& params);

/// The constructive reduction: the center set of the reduced induced
/// decomposition of a maximum-immorality DAG on a triangle-free skeleton is
/// a minimum vertex cover. attained_m is m(G) (e.g. from a census record);
/// throws std::invalid_argument if the skeleton has a triangle or d does not
/// attain it.
VertexCover vertex_cover_from_max_immorality_dag(const Dag& d, long long attained_m);

nlohmann::ordered_json decomposition_to_json(const StarDecomposition& s);

}  // namespace mec
