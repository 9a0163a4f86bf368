#include "mec/families.hpp"

#include <algorithm>
#include <set>

namespace mec {

Skeleton make_empty(int n) { return Skeleton(n); }

Skeleton make_path(int n) {
    Skeleton g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Skeleton make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
    Skeleton g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Skeleton make_star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("negative leaf count");
    Skeleton g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Skeleton make_complete(int n) {
    Skeleton g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Skeleton make_complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("bipartite sides must be nonempty");
    Skeleton g(p + q);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) g.add_edge(a, p + b);
    return g;
}

Skeleton make_double_star(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("negative leaf count");
    Skeleton g(p + q + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < p; ++i) g.add_edge(0, 2 + i);
    for (int j = 0; j < q; ++j) g.add_edge(1, 2 + p + j);
    return g;
}

std::vector<int> expand_connection_set(int p, const std::vector<int>& connection) {
    if (connection.empty()) throw std::invalid_argument("empty connection set");
    std::set<int> expanded;
    for (int c : connection) {
        if (c < 1 || c > p / 2)
            throw std::invalid_argument("connection element " + std::to_string(c) +
                                        " outside [1, " + std::to_string(p / 2) + "]");
        expanded.insert(c);
        expanded.insert(p - c);
    }
    return {expanded.begin(), expanded.end()};
}

Skeleton make_circulant(int p, const std::vector<int>& connection) {
    auto expanded = expand_connection_set(p, connection);
    Skeleton g(p);
    for (int i = 0; i < p; ++i)
        for (int c : expanded)
            if (int j = (i + c) % p; j != i) g.add_edge(i, j);
    return g;
}

Skeleton disjoint_union(const Skeleton& a, const Skeleton& b) {
    const int na = a.node_count(), nb = b.node_count();
    Skeleton g(na + nb);  // throws past the cap
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    return g;
}

Skeleton disjoint_union(const std::vector<Skeleton>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty union");
    Skeleton g = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, parts[i]);
    return g;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return value;
}

}  // namespace

Skeleton make_family(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& name = parts[0];
    const int arity = static_cast<int>(parts.size()) - 1;
    auto need = [&](int k) {
        if (arity != k)
            throw std::invalid_argument("family '" + name + "' takes " + std::to_string(k) +
                                        " parameter(s), got " + std::to_string(arity));
    };
    try {
        if (name == "path") { need(1); return make_path(parse_int(parts[1])); }
        if (name == "cycle") { need(1); return make_cycle(parse_int(parts[1])); }
        if (name == "star") { need(1); return make_star(parse_int(parts[1])); }
        if (name == "complete") { need(1); return make_complete(parse_int(parts[1])); }
        if (name == "empty") { need(1); return make_empty(parse_int(parts[1])); }
        if (name == "kpq") {
            need(2);
            return make_complete_bipartite(parse_int(parts[1]), parse_int(parts[2]));
        }
        if (name == "doublestar") {
            need(2);
            return make_double_star(parse_int(parts[1]), parse_int(parts[2]));
        }
        if (name == "circulant") {
            need(2);
            std::vector<int> conn;
            for (const auto& c : split(parts[2], ',')) conn.push_back(parse_int(c));
            return make_circulant(parse_int(parts[1]), conn);
        }
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("parameter out of range in '" + spec + "'");
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace mec
