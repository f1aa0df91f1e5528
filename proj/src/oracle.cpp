#include "d2c/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace d2c::oracle {

namespace {

// The oracle keeps its own adjacency matrix and its own traversal code so
// that it cannot inherit a bug from the main engine.
struct DenseGraph {
    int n;
    std::vector<char> adj;  // row-major n*n

    explicit DenseGraph(const Graph& g) : n(g.n()), adj(static_cast<size_t>(g.n()) * g.n(), 0) {
        for (auto [u, v] : g.edges()) {
            adj[static_cast<size_t>(u) * n + v] = 1;
            adj[static_cast<size_t>(v) * n + u] = 1;
        }
    }
    bool edge(int u, int v) const { return adj[static_cast<size_t>(u) * n + v] != 0; }
};

// Components by smallest vertex id, each with its BFS 2-coloring
// (root colored 1). Empty result means an odd cycle was hit.
struct ComponentColoring {
    std::vector<std::vector<int>> members;
    std::vector<int> base_colors;
    bool bipartite = true;
};

ComponentColoring two_color_components(const DenseGraph& g) {
    ComponentColoring out;
    out.base_colors.assign(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
        if (out.base_colors[root] != 0) continue;
        out.members.emplace_back();
        auto& comp = out.members.back();
        out.base_colors[root] = 1;
        std::vector<int> frontier{root};
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            comp.push_back(v);
            for (int w = 0; w < g.n; ++w) {
                if (!g.edge(v, w)) continue;
                if (out.base_colors[w] == 0) {
                    out.base_colors[w] = 3 - out.base_colors[v];
                    frontier.push_back(w);
                } else if (out.base_colors[w] == out.base_colors[v]) {
                    out.bipartite = false;
                    return out;
                }
            }
        }
    }
    return out;
}

// Complete search for a nontrivial automorphism p with c[p[v]] == c[v].
// Images are tried in ascending order; a partial assignment is extended
// only while it matches c and the adjacency seen so far.
struct NtaScan {
    const DenseGraph& g;
    const std::vector<int>& colors;
    std::vector<int> image;
    std::vector<char> used;

    NtaScan(const DenseGraph& g_, const std::vector<int>& colors_)
        : g(g_), colors(colors_), image(g_.n, -1), used(g_.n, 0) {}

    bool extend(int v) {
        if (v == g.n) {
            for (int i = 0; i < g.n; ++i)
                if (image[i] != i) return true;
            return false;  // identity
        }
        for (int w = 0; w < g.n; ++w) {
            if (used[w] || colors[w] != colors[v]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (g.edge(u, v) != g.edge(image[u], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (extend(v + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

bool has_color_preserving_nta_scan(const DenseGraph& g, const std::vector<int>& colors) {
    NtaScan scan(g, colors);
    return scan.extend(0);
}

}  // namespace

std::vector<TwoColoring> enumerate_proper_2_colorings(const Graph& g) {
    DenseGraph dense(g);
    auto cc = two_color_components(dense);
    if (!cc.bipartite) return {};
    int k = static_cast<int>(cc.members.size());
    std::vector<TwoColoring> out;
    out.reserve(1ull << k);
    for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
        std::vector<int> colors = cc.base_colors;
        for (int j = 0; j < k; ++j) {
            if ((mask >> j) & 1)
                for (int v : cc.members[j]) colors[v] = 3 - colors[v];
        }
        out.push_back(TwoColoring(std::move(colors)));
    }
    return out;
}

bool brute_chi_d_le_2(const Graph& g, int threshold) {
    if (g.n() < 1) throw std::invalid_argument("brute_chi_d_le_2: graph must have at least one vertex");
    if (g.n() > threshold)
        throw ThresholdError("brute_chi_d_le_2: n = " + std::to_string(g.n()) +
                             " exceeds brute-force threshold " + std::to_string(threshold));
    DenseGraph dense(g);
    auto cc = two_color_components(dense);
    if (!cc.bipartite) return false;
    int k = static_cast<int>(cc.members.size());
    for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
        std::vector<int> colors = cc.base_colors;
        for (int j = 0; j < k; ++j) {
            if ((mask >> j) & 1)
                for (int v : cc.members[j]) colors[v] = 3 - colors[v];
        }
        if (!has_color_preserving_nta_scan(dense, colors)) return true;
    }
    return false;
}

bool brute_is_asymmetric(const Graph& g, int threshold) {
    if (g.n() > threshold)
        throw ThresholdError("brute_is_asymmetric: n = " + std::to_string(g.n()) +
                             " exceeds brute-force threshold " + std::to_string(threshold));
    DenseGraph dense(g);
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        bool automorphism = true;
        for (int v = 0; v < g.n() && automorphism; ++v)
            for (int w = v + 1; w < g.n(); ++w)
                if (dense.edge(v, w) != dense.edge(perm[v], perm[w])) {
                    automorphism = false;
                    break;
                }
        if (automorphism) return false;
    }
    return true;
}

}  // namespace d2c::oracle
