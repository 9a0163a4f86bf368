#include "mec/generate.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mec/structure.hpp"

namespace mec {

std::vector<Skeleton> all_labeled_graphs(int n) {
    Skeleton base(n);
    const auto slots = [&] {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.push_back({u, v});
        return e;
    }();
    std::vector<Skeleton> out;
    out.reserve(1ull << slots.size());
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        Skeleton g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1ull) g.add_edge(slots[i].first, slots[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

// Iterated neighborhood refinement; the color strings are comparable across
// graphs, which is all the isomorphism search needs.
std::vector<std::string> refined_colors(const Skeleton& g, int rounds) {
    const int n = g.node_count();
    std::vector<std::string> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = std::to_string(g.degree(v));
    for (int r = 0; r < rounds; ++r) {
        std::vector<std::string> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::string> nbr;
            std::uint32_t rest = g.neighbors(v);
            while (rest) {
                nbr.push_back(colors[lowest_bit(rest)]);
                rest &= rest - 1;
            }
            std::sort(nbr.begin(), nbr.end());
            std::string sig = colors[v] + "(";
            for (const auto& s : nbr) sig += s + ",";
            sig += ")";
            next[v] = std::move(sig);
        }
        colors = std::move(next);
    }
    return colors;
}

std::string invariant_key(const Skeleton& g) {
    auto colors = refined_colors(g, 2);
    std::sort(colors.begin(), colors.end());
    std::string key = std::to_string(g.node_count()) + "|" + std::to_string(g.edge_count()) +
                      "|" + std::to_string(count_triangles(g)) + "|";
    for (const auto& c : colors) key += c + ";";
    return key;
}

bool extend_mapping(const Skeleton& a, const Skeleton& b, const std::vector<int>& order,
                    const std::vector<std::vector<int>>& candidates, std::size_t depth,
                    std::vector<int>& image, std::uint32_t& used) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int w : candidates[u]) {
        if ((used >> w) & 1u) continue;
        bool ok = true;
        for (std::size_t j = 0; j < depth && ok; ++j)
            if (a.has_edge(u, order[j]) != b.has_edge(w, image[order[j]])) ok = false;
        if (!ok) continue;
        image[u] = w;
        used |= 1u << w;
        if (extend_mapping(a, b, order, candidates, depth + 1, image, used)) return true;
        used &= ~(1u << w);
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Skeleton& a, const Skeleton& b) {
    const int n = a.node_count();
    if (n != b.node_count() || a.edge_count() != b.edge_count()) return false;

    const auto ca = refined_colors(a, 2);
    const auto cb = refined_colors(b, 2);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<std::vector<int>> candidates(n);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            if (ca[u] == cb[w]) candidates[u].push_back(w);

    // Most-constrained vertices first.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (candidates[x].size() != candidates[y].size())
            return candidates[x].size() < candidates[y].size();
        return x < y;
    });

    std::vector<int> image(n, -1);
    std::uint32_t used = 0;
    return extend_mapping(a, b, order, candidates, 0, image, used);
}

namespace {

std::vector<Skeleton> dedupe(std::vector<Skeleton> candidates) {
    std::vector<Skeleton> accepted;
    std::unordered_map<std::string, std::vector<std::size_t>> buckets;
    for (auto& g : candidates) {
        auto& bucket = buckets[invariant_key(g)];
        bool fresh = true;
        for (std::size_t idx : bucket)
            if (are_isomorphic(g, accepted[idx])) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(accepted.size());
            accepted.push_back(std::move(g));
        }
    }
    return accepted;
}

}  // namespace

std::vector<Skeleton> nonisomorphic_graphs(int n) {
    std::vector<Skeleton> level{Skeleton(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<Skeleton> candidates;
        candidates.reserve(level.size() << k);
        for (const auto& g : level) {
            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                Skeleton h(k + 1);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                std::uint32_t rest = mask;
                while (rest) {
                    h.add_edge(lowest_bit(rest), k);
                    rest &= rest - 1;
                }
                candidates.push_back(std::move(h));
            }
        }
        level = dedupe(std::move(candidates));
    }
    return level;
}

std::vector<Skeleton> nonisomorphic_connected_graphs(int n) {
    auto all = nonisomorphic_graphs(n);
    std::erase_if(all, [](const Skeleton& g) { return !is_connected(g); });
    return all;
}

Skeleton random_graph(std::mt19937& rng, int n, double edge_prob) {
    std::bernoulli_distribution flip(edge_prob);
    Skeleton g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

Skeleton random_connected_graph(std::mt19937& rng, int n, double edge_prob) {
    while (true) {
        Skeleton g = random_graph(rng, n, edge_prob);
        if (is_connected(g)) return g;
    }
}

Skeleton random_triangle_free_graph(std::mt19937& rng, int n, double edge_prob) {
    Skeleton g = random_graph(rng, n, edge_prob);
    while (true) {
        // find a triangle, knock out one of its edges at random
        int tu = -1, tv = -1, tw = -1;
        for (int u = 0; u < n && tu < 0; ++u)
            for (int v = u + 1; v < n && tu < 0; ++v) {
                if (!g.has_edge(u, v)) continue;
                const std::uint32_t common = g.neighbors(u) & g.neighbors(v);
                if (common) {
                    tu = u;
                    tv = v;
                    tw = lowest_bit(common);
                }
            }
        if (tu < 0) return g;
        const std::array<Edge, 3> tri{make_edge(tu, tv), make_edge(tu, tw), make_edge(tv, tw)};
        const auto [du, dv] = tri[std::uniform_int_distribution<int>(0, 2)(rng)];
        Skeleton h(n);
        for (auto [u, v] : g.edges())
            if (!(u == du && v == dv)) h.add_edge(u, v);
        g = h;
    }
}

}  // namespace mec
