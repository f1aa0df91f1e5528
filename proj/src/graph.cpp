#include "d2c/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace d2c {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

TwoColoring::TwoColoring(std::vector<int> c) : colors(std::move(c)) {
    for (int x : colors)
        if (x != 1 && x != 2)
            throw std::invalid_argument("TwoColoring: color values must be 1 or 2");
}

bool is_proper(const Graph& g, const TwoColoring& c) {
    if (c.size() != g.n()) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

bool is_valid_odd_cycle(const Graph& g, const OddCycleCertificate& cert) {
    const auto& cyc = cert.cycle;
    int len = static_cast<int>(cyc.size());
    if (len < 3 || len % 2 == 0) return false;
    std::unordered_set<int> seen;
    for (int v : cyc) {
        if (v < 0 || v >= g.n() || !seen.insert(v).second) return false;
    }
    for (int i = 0; i < len; ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % len])) return false;
    return true;
}

std::pair<int, int> SubdivisionMap::source_edge(int v) const {
    if (v < source_n || v >= subdivided_n())
        throw std::out_of_range("SubdivisionMap: not an edge vertex");
    return source_edges[v - source_n];
}

std::optional<int> SubdivisionMap::edge_vertex(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(source_edges.begin(), source_edges.end(), std::make_pair(u, v));
    if (it == source_edges.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return source_n + static_cast<int>(it - source_edges.begin());
}

Graph SubdivisionMap::source_graph() const { return Graph(source_n, source_edges); }

Graph SubdivisionMap::subdivided_graph() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * source_edges.size());
    for (int i = 0; i < static_cast<int>(source_edges.size()); ++i) {
        auto [u, v] = source_edges[i];
        edges.emplace_back(u, source_n + i);
        edges.emplace_back(v, source_n + i);
    }
    return Graph(subdivided_n(), edges);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

std::vector<Component> connected_components(const Graph& g) {
    std::vector<Component> result;
    std::vector<int> comp_of(g.n(), -1);
    for (int root = 0; root < g.n(); ++root) {
        if (comp_of[root] != -1) continue;
        int id = static_cast<int>(result.size());
        std::vector<int> members;
        std::queue<int> queue;
        queue.push(root);
        comp_of[root] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp_of[w] == -1) {
                    comp_of[w] = id;
                    queue.push(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<int> local(g.n(), -1);
        for (int i = 0; i < static_cast<int>(members.size()); ++i) local[members[i]] = i;
        std::vector<std::pair<int, int>> edges;
        for (int v : members)
            for (int w : g.neighbors(v))
                if (v < w) edges.emplace_back(local[v], local[w]);
        result.push_back({Graph(static_cast<int>(members.size()), edges), std::move(members)});
    }
    return result;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push(w);
            }
        }
    }
    return count == g.n();
}

namespace {

// Walk BFS parent pointers from u and v to their lowest common ancestor;
// the two tree paths plus the edge {u, v} form an odd cycle.
OddCycleCertificate odd_cycle_from(int u, int v, const std::vector<int>& parent,
                                   const std::vector<int>& depth) {
    std::vector<int> pu, pv;
    int a = u, b = v;
    while (depth[a] > depth[b]) {
        pu.push_back(a);
        a = parent[a];
    }
    while (depth[b] > depth[a]) {
        pv.push_back(b);
        b = parent[b];
    }
    while (a != b) {
        pu.push_back(a);
        pv.push_back(b);
        a = parent[a];
        b = parent[b];
    }
    pu.push_back(a);  // the common ancestor
    std::vector<int> cycle = std::move(pu);
    for (auto it = pv.rbegin(); it != pv.rend(); ++it) cycle.push_back(*it);
    return OddCycleCertificate{std::move(cycle)};
}

}  // namespace

std::variant<TwoColoring, OddCycleCertificate> bipartition(const Graph& g) {
    std::vector<int> colors(g.n(), 0), parent(g.n(), -1), depth(g.n(), 0);
    for (int root = 0; root < g.n(); ++root) {
        if (colors[root] != 0) continue;
        colors[root] = 1;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                if (colors[w] == 0) {
                    colors[w] = 3 - colors[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push(w);
                } else if (colors[w] == colors[v]) {
                    auto cert = odd_cycle_from(v, w, parent, depth);
                    if (!is_valid_odd_cycle(g, cert))
                        throw std::logic_error("bipartition: produced an invalid odd-cycle certificate");
                    return cert;
                }
            }
        }
    }
    return TwoColoring(std::move(colors));
}

std::pair<Graph, SubdivisionMap> subdivide(const Graph& g) {
    SubdivisionMap map{g.n(), g.edges()};
    return {map.subdivided_graph(), map};
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const auto& part : parts) {
        for (auto [u, v] : part.edges()) edges.emplace_back(n + u, n + v);
        n += part.n();
    }
    return Graph(n, edges);
}

}  // namespace d2c
