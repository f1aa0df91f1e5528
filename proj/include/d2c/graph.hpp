#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace d2c {

// Thrown on malformed graph6 / edge-list input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a brute-force routine is asked to exceed its size bound.
struct ThresholdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1.
/// Immutable after construction; no self-loops, no duplicate edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // Sorted lexicographically, each pair with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Vertex coloring with values in {1, 2}. Properness is a property of a
/// (Graph, TwoColoring) pair, not of the coloring alone.
struct TwoColoring {
    std::vector<int> colors;  // colors[v] in {1, 2}

    TwoColoring() = default;
    explicit TwoColoring(std::vector<int> c);
    int size() const { return static_cast<int>(colors.size()); }
    int operator[](int v) const { return colors[v]; }

    bool operator==(const TwoColoring&) const = default;
};

bool is_proper(const Graph& g, const TwoColoring& c);

/// Witness that a graph is not bipartite: a closed walk of odd length
/// through distinct, consecutively adjacent vertices.
struct OddCycleCertificate {
    std::vector<int> cycle;
};

bool is_valid_odd_cycle(const Graph& g, const OddCycleCertificate& cert);

/// One connected component, relabeled to 0..|C|-1.
/// vertex_map[local] = vertex id in the original graph (ascending).
struct Component {
    Graph graph;
    std::vector<int> vertex_map;
};

/// Provenance record for subdivide(): vertices 0..source_n-1 are the
/// original vertices; vertex source_n + i subdivides source_edges[i]
/// (edges in lexicographic order). Carries enough to reconstruct both
/// the source and the subdivided graph.
struct SubdivisionMap {
    int source_n = 0;
    std::vector<std::pair<int, int>> source_edges;

    int subdivided_n() const { return source_n + static_cast<int>(source_edges.size()); }
    bool is_original(int v) const { return v < source_n; }
    std::pair<int, int> source_edge(int v) const;
    std::optional<int> edge_vertex(int u, int v) const;
    Graph source_graph() const;
    Graph subdivided_graph() const;
};

Graph complement(const Graph& g);

/// Components ordered by smallest original vertex id; maps are disjoint
/// and cover [0, n).
std::vector<Component> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Proper 2-coloring if bipartite (BFS from the smallest vertex id of
/// each component, root gets color 1), otherwise an odd cycle.
std::variant<TwoColoring, OddCycleCertificate> bipartition(const Graph& g);

/// Subdivide every edge once. Original vertices keep their ids; edge
/// vertices are appended in lexicographic edge order.
std::pair<Graph, SubdivisionMap> subdivide(const Graph& g);

Graph disjoint_union(const std::vector<Graph>& parts);

// graph6 records, single size byte for n <= 62, '~'-prefixed 3-byte size
// for 63 <= n <= 258047. Zero padding is required on parse and emitted
// on write. The empty graph (n = 0) is rejected.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Edge-list format: "n m" header, then m lines "u v" (0-based). Lines
// starting with '#' and blank lines are ignored.
Graph parse_edge_list(std::string_view text);

}  // namespace d2c
