#include "d2c/decide.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

namespace d2c {

namespace {

// Local component permutation extended to the whole graph by the identity.
Permutation embed(const Permutation& local, const Component& comp, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int u = 0; u < local.size(); ++u)
        p[comp.vertex_map[u]] = comp.vertex_map[local[u]];
    return Permutation(std::move(p));
}

TwoColoring component_coloring(const Graph& g) {
    auto bp = bipartition(g);
    if (!std::holds_alternative<TwoColoring>(bp))
        throw std::invalid_argument("component is not bipartite");
    return std::get<TwoColoring>(bp);
}

// Classes ordered by first member; members ascending.
std::vector<std::vector<int>> group_by_key(const std::vector<CanonicalForm>& forms) {
    std::vector<std::vector<int>> classes;
    std::unordered_map<std::string, int> where;
    for (int i = 0; i < static_cast<int>(forms.size()); ++i) {
        auto [it, fresh] = where.try_emplace(forms[i].key, static_cast<int>(classes.size()));
        if (fresh)
            classes.push_back({i});
        else
            classes[it->second].push_back(i);
    }
    return classes;
}

}  // namespace

std::optional<Permutation> cc_check(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("cc_check: graph must have at least one vertex");
    if (!is_connected(g)) throw std::invalid_argument("cc_check: input must be connected");
    if (g.n() == 1) return std::nullopt;
    auto bp = bipartition(g);
    if (std::holds_alternative<OddCycleCertificate>(bp))
        throw std::invalid_argument("cc_check: non-bipartite input; callers must check bipartiteness first");
    return has_color_preserving_nta(g, std::get<TwoColoring>(bp));
}

D2CVerdict decide_d2c(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("decide_d2c: graph must have at least one vertex");
    D2CVerdict verdict;

    auto bp = bipartition(g);
    if (auto* odd = std::get_if<OddCycleCertificate>(&bp)) {
        if (!is_valid_odd_cycle(g, *odd))
            throw std::logic_error("decide_d2c: odd cycle certificate failed verification");
        verdict.reason = NonBipartite{*odd};
        return verdict;
    }

    std::vector<Component> comps = connected_components(g);

    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        std::optional<Permutation> nta = cc_check(comps[i].graph);
        if (!nta) continue;
        TwoColoring local_colors = component_coloring(comps[i].graph);
        if (nta->is_identity() || !is_automorphism(comps[i].graph, *nta) ||
            !preserves_coloring(local_colors, *nta))
            throw std::logic_error("decide_d2c: component certificate failed verification");
        Permutation global = embed(*nta, comps[i], g.n());
        if (global.is_identity() || !is_automorphism(g, global))
            throw std::logic_error("decide_d2c: embedded certificate failed verification");
        verdict.reason = ComponentNotDistinguishable{i, std::move(global)};
        return verdict;
    }

    std::vector<CanonicalForm> forms;
    forms.reserve(comps.size());
    for (const auto& c : comps) forms.push_back(canonical_form(c.graph));
    std::vector<std::vector<int>> classes = group_by_key(forms);

    for (const auto& cls : classes) {
        if (cls.size() < 3) continue;
        int i = cls[0], j = cls[1], k = cls[2];
        Permutation pij = compose(forms[j].labeling.inverse(), forms[i].labeling);
        Permutation pik = compose(forms[k].labeling.inverse(), forms[i].labeling);
        if (!is_isomorphism(comps[i].graph, comps[j].graph, pij) ||
            !is_isomorphism(comps[i].graph, comps[k].graph, pik))
            throw std::logic_error("decide_d2c: class isomorphisms failed verification");
        verdict.reason =
            ThreeIsomorphicComponents{{i, j, k}, {std::move(pij), std::move(pik)}};
        return verdict;
    }

    for (const auto& cls : classes) {
        if (cls.size() != 2) continue;
        int i = cls[0], j = cls[1];
        std::optional<Permutation> nta = has_nta(comps[i].graph);
        if (!nta) continue;
        Permutation iso = compose(forms[j].labeling.inverse(), forms[i].labeling);
        if (!is_isomorphism(comps[i].graph, comps[j].graph, iso) || nta->is_identity() ||
            !is_automorphism(comps[i].graph, *nta))
            throw std::logic_error("decide_d2c: pair certificate failed verification");
        verdict.reason = IsomorphicPairNotAsymmetric{{i, j}, std::move(iso), std::move(*nta)};
        return verdict;
    }

    TwoColoring witness = build_witness_coloring(comps, classes);
    if (!verify_distinguishing(g, witness))
        throw std::logic_error("decide_d2c: witness coloring failed verification");
    verdict.witness = std::move(witness);
    return verdict;
}

TwoColoring build_witness_coloring(const std::vector<Component>& components,
                                   const std::vector<std::vector<int>>& iso_classes) {
    int count = static_cast<int>(components.size());
    int n = 0;
    for (const auto& c : components) n += c.graph.n();

    std::vector<char> covered(count, 0);
    for (const auto& cls : iso_classes) {
        if (cls.empty() || cls.size() > 2)
            throw std::invalid_argument("build_witness_coloring: classes must have one or two members");
        for (int i : cls) {
            if (i < 0 || i >= count || covered[i])
                throw std::invalid_argument("build_witness_coloring: classes must partition the components");
            covered[i] = 1;
        }
    }
    for (char c : covered)
        if (!c) throw std::invalid_argument("build_witness_coloring: classes must partition the components");

    std::vector<int> colors(n, 0);
    auto place = [&](const Component& comp, const TwoColoring& local) {
        for (int v = 0; v < comp.graph.n(); ++v) {
            int global = comp.vertex_map[v];
            if (global < 0 || global >= n || colors[global] != 0)
                throw std::invalid_argument("build_witness_coloring: component vertex maps must be disjoint");
            colors[global] = local[v];
        }
    };

    for (const auto& cls : iso_classes) {
        const Component& first = components[cls[0]];
        if (cc_check(first.graph))
            throw std::invalid_argument("build_witness_coloring: component admits a color-preserving symmetry");
        TwoColoring base = component_coloring(first.graph);
        place(first, base);
        if (cls.size() == 1) continue;

        const Component& second = components[cls[1]];
        if (has_nta(first.graph))
            throw std::invalid_argument("build_witness_coloring: paired component is not asymmetric");
        std::optional<Permutation> phi = are_isomorphic(first.graph, second.graph);
        if (!phi)
            throw std::invalid_argument("build_witness_coloring: paired components are not isomorphic");
        // Asymmetry makes phi unique, so inverting colors across it blocks
        // every color-preserving swap of the pair.
        std::vector<int> flipped(second.graph.n(), 0);
        for (int v = 0; v < first.graph.n(); ++v) flipped[(*phi)[v]] = 3 - base[v];
        place(second, TwoColoring(std::move(flipped)));
    }
    return TwoColoring(std::move(colors));
}

bool verify_distinguishing(const Graph& g, const TwoColoring& c) {
    if (c.size() != g.n())
        throw std::invalid_argument("verify_distinguishing: coloring length does not match the graph");
    if (!is_proper(g, c)) return false;
    return !has_color_preserving_nta(g, c).has_value();
}

}  // namespace d2c
