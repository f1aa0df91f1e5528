#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "d2c/graph.hpp"
#include "d2c/iso.hpp"

namespace testutil {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline d2c::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) edges.emplace_back(u, v);
    return d2c::Graph(n, edges);
}

// Random subgraph of a complete bipartite graph on sides of size
// left and right; the left side is vertices 0..left-1.
inline d2c::Graph random_bipartite_graph(int left, int right, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < left; ++u)
        for (int v = left; v < left + right; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return d2c::Graph(left + right, edges);
}

inline d2c::Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return d2c::Permutation(std::move(p));
}

// Every graph on exactly n labeled vertices, by edge bitmask.
inline std::vector<d2c::Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
    std::vector<d2c::Graph> out;
    out.reserve(std::size_t{1} << slots.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (std::uint32_t{1} << i)) edges.push_back(slots[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

// catalog[k] = one representative per isomorphism class on k+1 vertices,
// built by extending each (k)-vertex representative with every possible
// neighborhood for a new vertex and deduplicating on canonical keys.
// Cached; the expensive sizes are only ever built once per process.
inline const std::vector<std::vector<d2c::Graph>>& graph_catalog(int max_n) {
    static std::vector<std::vector<d2c::Graph>> catalog{{d2c::Graph(1)}};
    for (int size = static_cast<int>(catalog.size()) + 1; size <= max_n; ++size) {
        std::vector<d2c::Graph> next;
        std::unordered_set<std::string> seen;
        for (const auto& g : catalog.back()) {
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (size - 1)); ++mask) {
                std::vector<std::pair<int, int>> edges = g.edges();
                for (int u = 0; u < size - 1; ++u)
                    if (mask & (std::uint32_t{1} << u)) edges.emplace_back(u, size - 1);
                d2c::Graph h(size, edges);
                if (seen.insert(d2c::canonical_form(h).key).second) next.push_back(std::move(h));
            }
        }
        catalog.push_back(std::move(next));
    }
    return catalog;
}

// Exhaustive automorphism listing for small graphs, independent of the
// search engine (plain permutation scan).
inline std::vector<d2c::Permutation> all_automorphisms(const d2c::Graph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<d2c::Permutation> out;
    do {
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (!g.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(d2c::Permutation(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline d2c::Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return d2c::Graph(n, edges);
}

inline d2c::Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return d2c::Graph(n, edges);
}

inline d2c::Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    return d2c::Graph(n, edges);
}

}  // namespace testutil
