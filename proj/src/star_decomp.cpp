#include "mec/star_decomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mec/census.hpp"
#include "mec/families.hpp"
#include "mec/structure.hpp"

namespace mec {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

std::vector<int> mask_to_list(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(lowest_bit(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

std::vector<int> VertexCover::node_list() const { return mask_to_list(nodes); }

bool covers_all_edges(const Skeleton& g, std::uint32_t nodes) {
    for (auto [u, v] : g.edges())
        if (!((nodes >> u) & 1u) && !((nodes >> v) & 1u)) return false;
    return true;
}

bool is_valid_partition(const StarDecomposition& s) {
    const auto edges = s.host.edges();
    std::set<Edge> seen;
    for (const auto& star : s.stars) {
        std::uint32_t leaves = star.leaves;
        if (leaves >> star.center & 1u) return false;
        while (leaves) {
            const int leaf = lowest_bit(leaves);
            leaves &= leaves - 1;
            if (!s.host.has_edge(star.center, leaf)) return false;
            if (!seen.insert(make_edge(star.center, leaf)).second) return false;
        }
    }
    return seen.size() == edges.size();
}

EdgePartition canonical_partition(const StarDecomposition& s) {
    EdgePartition parts;
    for (const auto& star : s.stars) {
        if (star.trivial()) continue;
        std::vector<Edge> edges;
        std::uint32_t leaves = star.leaves;
        while (leaves) {
            const int leaf = lowest_bit(leaves);
            leaves &= leaves - 1;
            edges.push_back(make_edge(star.center, leaf));
        }
        std::sort(edges.begin(), edges.end());
        parts.push_back(std::move(edges));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

namespace {

// Branch on the first uncovered edge; include one endpoint or the other.
void cover_size_rec(const Skeleton& g, const std::vector<Edge>& edges, std::size_t idx,
                    std::uint32_t chosen, int size, int& best) {
    if (size >= best) return;
    while (idx < edges.size()) {
        const auto [u, v] = edges[idx];
        if (((chosen >> u) | (chosen >> v)) & 1u) {
            ++idx;
            continue;
        }
        cover_size_rec(g, edges, idx + 1, chosen | (1u << u), size + 1, best);
        cover_size_rec(g, edges, idx + 1, chosen | (1u << v), size + 1, best);
        return;
    }
    best = size;
}

// All independent sets of exactly `want` nodes (their complements are the
// covers of minimum size).
void independent_sets_rec(const Skeleton& g, int next, int want, std::uint32_t chosen,
                          std::uint32_t banned, std::vector<std::uint32_t>& out) {
    const int n = g.node_count();
    const int have = popcount32(chosen);
    if (have == want) {
        out.push_back(chosen);
        return;
    }
    if (n - next < want - have) return;
    for (int v = next; v < n; ++v) {
        if (n - v < want - have) return;
        if ((banned >> v) & 1u) continue;
        independent_sets_rec(g, v + 1, want, chosen | (1u << v), banned | g.neighbors(v), out);
    }
}

}  // namespace

int minimum_vertex_cover_size(const Skeleton& g) {
    const auto edges = g.edges();
    int best = g.node_count();
    cover_size_rec(g, edges, 0, 0, 0, best);
    return best;
}

int max_independent_set_size(const Skeleton& g) {
    return g.node_count() - minimum_vertex_cover_size(g);
}

std::vector<VertexCover> minimum_vertex_covers(const Skeleton& g) {
    const int tau = minimum_vertex_cover_size(g);
    std::vector<std::uint32_t> independents;
    independent_sets_rec(g, 0, g.node_count() - tau, 0, 0, independents);
    std::vector<VertexCover> covers;
    covers.reserve(independents.size());
    const std::uint32_t all = g.node_mask();
    for (auto ind : independents) covers.push_back({g, all & ~ind});
    std::sort(covers.begin(), covers.end(),
              [](const VertexCover& a, const VertexCover& b) { return a.nodes < b.nodes; });
    return covers;
}

StarDecomposition decomposition_from_cover(const Skeleton& g, const VertexCover& cover,
                                           const std::vector<int>& center_order) {
    if (!covers_all_edges(g, cover.nodes))
        throw std::invalid_argument("node set is not a vertex cover");
    std::uint32_t order_mask = 0;
    for (int c : center_order) order_mask |= 1u << c;
    if (order_mask != cover.nodes || center_order.size() != static_cast<std::size_t>(cover.size()))
        throw std::invalid_argument("center_order is not a permutation of the cover");

    std::array<int, kMaxNodes> rank;
    rank.fill(kMaxNodes);
    for (std::size_t i = 0; i < center_order.size(); ++i) rank[center_order[i]] = static_cast<int>(i);

    StarDecomposition s{g, {}};
    for (int c : center_order) s.stars.push_back({c, 0});
    for (auto [u, v] : g.edges()) {
        const int pick = rank[u] <= rank[v] ? u : v;
        const int other = pick == u ? v : u;
        s.stars[rank[pick]].leaves |= 1u << other;
    }
    return s;
}

StarDecomposition induced_decomposition(const Dag& d) {
    StarDecomposition s{d.skeleton, {}};
    for (int v = 0; v < d.skeleton.node_count(); ++v) s.stars.push_back({v, d.parents[v]});
    return s;
}

StarDecomposition reduce(const StarDecomposition& s) {
    StarDecomposition out{s.host, {}};
    for (const auto& star : s.stars)
        if (!star.trivial()) out.stars.push_back(star);
    return out;
}

std::vector<int> size_vector(const StarDecomposition& s, int m) {
    if (m < s.star_count())
        throw std::invalid_argument("target length " + std::to_string(m) + " below star count " +
                                    std::to_string(s.star_count()));
    std::vector<int> v;
    v.reserve(m);
    for (const auto& star : s.stars) v.push_back(star.size());
    std::sort(v.rbegin(), v.rend());
    v.resize(m, 0);
    return v;
}

namespace {

// Nodes lying on a directed cycle of the orientation given by out-masks.
std::uint32_t cycle_nodes(const std::array<std::uint32_t, kMaxNodes>& out, int n) {
    std::uint32_t cyc = 0;
    for (int v = 0; v < n; ++v) {
        std::uint32_t seen = out[v], frontier = seen;
        while (frontier) {
            if ((seen >> v) & 1u) break;
            const int w = lowest_bit(frontier);
            frontier &= frontier - 1;
            const std::uint32_t fresh = out[w] & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        if ((seen >> v) & 1u) cyc |= 1u << v;
    }
    return cyc;
}

}  // namespace

Dag dagify(const StarDecomposition& s) {
    if (!is_valid_partition(s)) throw std::invalid_argument("dagify: not an edge partition");
    const Skeleton& g = s.host;
    const int n = g.node_count();

    std::array<std::uint32_t, kMaxNodes> out{};
    Dag dag{g, {}};
    for (const auto& star : s.stars) {
        dag.parents[star.center] |= star.leaves;
        std::uint32_t leaves = star.leaves;
        while (leaves) {
            const int leaf = lowest_bit(leaves);
            leaves &= leaves - 1;
            out[leaf] |= 1u << star.center;
        }
    }

    std::uint32_t excluded = 0;
    while (true) {
        const std::uint32_t cyc = cycle_nodes(out, n);
        if (!cyc) break;
        const std::uint32_t candidates = cyc & ~excluded;
        if (!candidates)
            throw DagifyError(
                "sink-selection exhausted: every remaining cycle node lies in the closed "
                "neighborhood of an earlier pick");
        int pick = -1, best_deg = -1;
        std::uint32_t rest = candidates;
        while (rest) {
            const int v = lowest_bit(rest);
            rest &= rest - 1;
            if (g.degree(v) > best_deg) {
                best_deg = g.degree(v);
                pick = v;
            }
        }
        // Reorient every arrow at `pick` to point into it.
        std::uint32_t heads = out[pick];
        dag.parents[pick] |= heads;
        out[pick] = 0;
        while (heads) {
            const int w = lowest_bit(heads);
            heads &= heads - 1;
            out[w] |= 1u << pick;
            dag.parents[w] &= ~(1u << pick);
        }
        excluded |= (1u << pick) | g.neighbors(pick);
    }
    return dag;
}

bool is_induced_by_some_dag(const StarDecomposition& s, std::uint64_t budget) {
    const EdgePartition target = canonical_partition(s);
    bool found = false;
    for_each_acyclic_orientation_while(s.host, budget, [&](const Dag& d) {
        if (canonical_partition(induced_decomposition(d)) == target) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<StarDecomposition> enumerate_min_star_decompositions(const Skeleton& g,
                                                                 std::uint64_t budget) {
    const auto covers = minimum_vertex_covers(g);
    const auto edges = g.edges();

    std::set<EdgePartition> seen;
    std::vector<StarDecomposition> out;
    std::uint64_t produced = 0;

    std::array<int, kMaxNodes> star_at{};
    for (const auto& cover : covers) {
        std::vector<int> centers = cover.node_list();
        star_at.fill(-1);
        for (std::size_t i = 0; i < centers.size(); ++i) star_at[centers[i]] = static_cast<int>(i);

        // Edges with both endpoints in the cover branch two ways.
        std::vector<Edge> free_edges;
        std::vector<std::uint32_t> forced(centers.size(), 0);
        for (auto [u, v] : edges) {
            const bool cu = (cover.nodes >> u) & 1u, cv = (cover.nodes >> v) & 1u;
            if (cu && cv)
                free_edges.push_back({u, v});
            else if (cu)
                forced[star_at[u]] |= 1u << v;
            else
                forced[star_at[v]] |= 1u << u;
        }
        if (free_edges.size() > 62 || (produced += 1ull << free_edges.size()) > budget)
            throw BudgetExceeded("minimum star decomposition fan-out exceeds budget", produced);

        for (std::uint64_t choice = 0; choice < (1ull << free_edges.size()); ++choice) {
            StarDecomposition s{g, {}};
            for (std::size_t i = 0; i < centers.size(); ++i) s.stars.push_back({centers[i], forced[i]});
            for (std::size_t i = 0; i < free_edges.size(); ++i) {
                const auto [u, v] = free_edges[i];
                if ((choice >> i) & 1ull)
                    s.stars[star_at[v]].leaves |= 1u << u;
                else
                    s.stars[star_at[u]].leaves |= 1u << v;
            }
            if (seen.insert(canonical_partition(s)).second) out.push_back(std::move(s));
        }
    }
    return out;
}

StructuralImmoralityNumber structural_immorality_number(const Skeleton& g, std::uint64_t budget) {
    StructuralImmoralityNumber result;
    if (!is_triangle_free(g)) {
        result.applicability = StructuralImmoralityNumber::Applicability::not_applicable;
        result.note = "skeleton has a triangle";
        return result;
    }
    std::vector<StarDecomposition> decomps;
    try {
        decomps = enumerate_min_star_decompositions(g, budget);
    } catch (const BudgetExceeded&) {
        result.applicability = StructuralImmoralityNumber::Applicability::unknown;
        result.note = "enumeration budget exceeded; applicability undecided";
        return result;
    }
    const int m = g.edge_count();
    std::vector<int> reference;
    for (std::size_t i = 0; i < decomps.size(); ++i) {
        auto v = size_vector(decomps[i], std::max(m, decomps[i].star_count()));
        if (i == 0)
            reference = v;
        else if (v != reference) {
            result.applicability = StructuralImmoralityNumber::Applicability::not_applicable;
            result.note = "minimum star decompositions are not size-uniform";
            return result;
        }
    }
    result.applicability = StructuralImmoralityNumber::Applicability::applicable;
    long long value = 0;
    for (int size : reference) value += choose2(size);
    result.value = value;
    if (!decomps.empty()) result.witness = decomps.front();
    return result;
}

long long star_immorality_number(int p) { return choose2(p); }

long long k2p_immorality_number(int p) { return 2 * choose2(p); }

long long double_star_pp_immorality_number(int p) { return choose2(p + 1) + choose2(p); }

long long kpp_immorality_number(int p) { return p * choose2(p); }

ClosedFormResult circulant_immorality_number(int p, const std::vector<int>& connection) {
    if (p % 2 != 0) return {std::nullopt, "p is odd"};
    const auto expanded = expand_connection_set(p, connection);
    const Skeleton g = make_circulant(p, connection);
    if (!is_triangle_free(g)) return {std::nullopt, "graph has a triangle"};
    const bool has_unit = std::any_of(expanded.begin(), expanded.end(),
                                      [p](int c) { return std::gcd(c, p) == 1; });
    if (!has_unit) return {std::nullopt, "no unit in the connection set (no spanning cycle)"};
    if (max_independent_set_size(g) != p / 2)
        return {std::nullopt, "maximum independent set size is not p/2"};
    const long long degree = static_cast<long long>(expanded.size());
    return {static_cast<long long>(p / 2) * choose2(degree), ""};
}

ClosedFormResult closed_form_immorality_number(const std::string& family,
                                               const std::vector<int>& params) {
    if (family == "circulant") {
        if (params.size() < 2) throw std::invalid_argument("circulant needs p and a connection set");
        return circulant_immorality_number(params[0], {params.begin() + 1, params.end()});
    }
    if (params.size() != 1) throw std::invalid_argument("family '" + family + "' takes one parameter");
    const int p = params[0];
    if (family == "star") return {star_immorality_number(p), ""};
    if (family == "k2p") return {k2p_immorality_number(p), ""};
    if (family == "doublestar_pp") return {double_star_pp_immorality_number(p), ""};
    if (family == "kpp") return {kpp_immorality_number(p), ""};
    throw std::invalid_argument("unknown closed-form family '" + family + "'");
}

VertexCover vertex_cover_from_max_immorality_dag(const Dag& d, long long attained_m) {
    if (!is_triangle_free(d.skeleton))
        throw std::invalid_argument("skeleton has a triangle; the reduction needs triangle-free");
    if (immorality_count(d) != attained_m)
        throw std::invalid_argument("DAG has " + std::to_string(immorality_count(d)) +
                                    " immoralities, does not attain " + std::to_string(attained_m));
    std::uint32_t centers = 0;
    for (int v = 0; v < d.skeleton.node_count(); ++v)
        if (d.parents[v]) centers |= 1u << v;
    return {d.skeleton, centers};
}

nlohmann::ordered_json decomposition_to_json(const StarDecomposition& s) {
    nlohmann::ordered_json j;
    j["centers"] = mask_to_list(s.center_mask());
    auto stars = nlohmann::ordered_json::array();
    for (const auto& star : s.stars)
        stars.push_back({{"center", star.center}, {"leaves", mask_to_list(star.leaves)}});
    j["stars"] = std::move(stars);
    return j;
}

}  // namespace mec
