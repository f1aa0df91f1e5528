#include "d2c/reductions.hpp"

#include <algorithm>
#include <string>

namespace d2c {

GaToCcResult ga_to_cc(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("ga_to_cc: graph must have at least one vertex");
    GaToCcResult res;
    Graph h = g;
    if (!is_connected(h)) {
        h = complement(h);
        res.complemented = true;
    }
    if (h.n() == 1) {
        res.graph = std::move(h);
        res.tag = GaToCcCase::K1NoInstance;
        return res;
    }
    auto [sub, map] = subdivide(h);
    res.graph = std::move(sub);
    res.map = std::move(map);
    res.tag = GaToCcCase::Subdivided;
    return res;
}

Permutation lift_nta_to_subdivision(const Permutation& f, const SubdivisionMap& m) {
    Graph src = m.source_graph();
    if (!is_automorphism(src, f))
        throw std::invalid_argument("lift_nta_to_subdivision: not an automorphism of the source graph");
    std::vector<int> fp(m.subdivided_n());
    for (int v = 0; v < m.source_n; ++v) fp[v] = f[v];
    for (int i = 0; i < static_cast<int>(m.source_edges.size()); ++i) {
        auto [u, v] = m.source_edges[i];
        std::optional<int> image = m.edge_vertex(f[u], f[v]);
        if (!image)
            throw std::logic_error("lift_nta_to_subdivision: image edge missing from subdivision map");
        fp[m.source_n + i] = *image;
    }
    Permutation out(std::move(fp));
    if (!is_automorphism(m.subdivided_graph(), out))
        throw std::logic_error("lift_nta_to_subdivision: lifted map failed verification");
    return out;
}

Permutation restrict_nta_from_subdivision(const Permutation& f_prime, const SubdivisionMap& m) {
    Graph sub = m.subdivided_graph();
    if (!is_automorphism(sub, f_prime))
        throw std::invalid_argument("restrict_nta_from_subdivision: not an automorphism of the subdivision");
    for (int v = 0; v < m.source_n; ++v) {
        if (!m.is_original(f_prime[v]))
            throw CycleCaseError(
                "restrict_nta_from_subdivision: automorphism maps original vertex " +
                std::to_string(v) + " to edge vertex " + std::to_string(f_prime[v]) +
                " (cycle case: originals and edge vertices mix only on chordless cycles)");
    }
    std::vector<int> f(m.source_n);
    for (int v = 0; v < m.source_n; ++v) f[v] = f_prime[v];
    Permutation out(std::move(f));
    if (!is_automorphism(m.source_graph(), out))
        throw std::logic_error("restrict_nta_from_subdivision: restriction failed verification");
    return out;
}

CcToGaResult cc_to_ga(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("cc_to_ga: graph must have at least one vertex");
    if (!is_connected(g)) throw std::invalid_argument("cc_to_ga: input must be connected");

    CcToGaResult res;
    if (g.n() <= 2) {
        res.graph = Graph(1);
        res.tag = CcToGaCase::K1OrK2;
        return res;
    }
    auto bp = bipartition(g);
    if (std::holds_alternative<OddCycleCertificate>(bp)) {
        res.graph = Graph(2, {{0, 1}});
        res.tag = CcToGaCase::NonBipartite;
        return res;
    }
    const TwoColoring& coloring = std::get<TwoColoring>(bp);
    std::vector<int> x_class, y_class;
    for (int v = 0; v < g.n(); ++v)
        (coloring[v] == coloring[0] ? x_class : y_class).push_back(v);
    if (x_class.size() != y_class.size()) {
        res.graph = g;
        res.tag = CcToGaCase::Unbalanced;
        return res;
    }

    GadgetMap map;
    map.source_n = g.n();
    map.a = g.n();
    map.b = g.n() + 1;
    map.c = g.n() + 2;
    map.x_class = x_class;
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int x : x_class) edges.emplace_back(x, map.a);
    edges.emplace_back(map.a, map.b);
    edges.emplace_back(map.b, map.c);
    res.graph = Graph(g.n() + 3, edges);
    res.tag = CcToGaCase::Balanced;
    res.map = std::move(map);
    return res;
}

Permutation restrict_gadget_nta(const Graph& gadget, const Permutation& f, const GadgetMap& m) {
    if (gadget.n() != m.source_n + 3)
        throw std::invalid_argument("restrict_gadget_nta: graph does not match the gadget map");
    if (!is_automorphism(gadget, f))
        throw std::invalid_argument("restrict_gadget_nta: not an automorphism of the gadget graph");
    if (f[m.a] != m.a || f[m.b] != m.b || f[m.c] != m.c)
        throw std::logic_error("restrict_gadget_nta: tail vertices moved; degree argument violated");

    std::vector<int> restricted(m.source_n);
    for (int v = 0; v < m.source_n; ++v) restricted[v] = f[v];
    Permutation out(std::move(restricted));

    // Source graph is the gadget minus the tail and its attachment edges.
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : gadget.edges())
        if (v < m.source_n) edges.emplace_back(u, v);
    Graph src(m.source_n, edges);
    if (!is_automorphism(src, out))
        throw std::logic_error("restrict_gadget_nta: restriction failed verification");
    return out;
}

}  // namespace d2c
