#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "d2c/graph.hpp"
#include "d2c/iso.hpp"

namespace d2c {

// Refusal certificates for "no proper distinguishing 2-coloring exists".
// Each one is structurally re-verified before a verdict is returned.

struct NonBipartite {
    OddCycleCertificate certificate;
};

struct ComponentNotDistinguishable {
    int component_index = 0;
    Permutation nta;  // whole-graph ids, identity outside the component
};

struct ThreeIsomorphicComponents {
    std::array<int, 3> component_indices{};
    // isomorphisms[0]: first -> second, isomorphisms[1]: first -> third,
    // both in component-local ids.
    std::array<Permutation, 2> isomorphisms;
};

struct IsomorphicPairNotAsymmetric {
    std::array<int, 2> component_indices{};
    Permutation iso;  // first -> second, component-local ids
    Permutation nta;  // of the first component, component-local ids
};

using NoReason = std::variant<NonBipartite, ComponentNotDistinguishable,
                              ThreeIsomorphicComponents, IsomorphicPairNotAsymmetric>;

struct D2CVerdict {
    std::optional<TwoColoring> witness;
    std::optional<NoReason> reason;

    bool is_yes() const { return witness.has_value(); }
};

// Connected case: none iff the graph (K1 included) admits a proper
// distinguishing 2-coloring. Callers must rule out non-bipartite inputs
// first; here they are rejected.
std::optional<Permutation> cc_check(const Graph& g);

// Full decision procedure. Certificate priority is the algorithm order:
// bipartiteness, then per-component checks, then component triples, then
// symmetric pairs; within a step, lowest component index first.
D2CVerdict decide_d2c(const Graph& g);

// Witness assembly once all checks pass: singleton components keep their
// bipartition coloring; the second member of each isomorphic pair gets the
// colors inverted through the unique isomorphism. Preconditions are
// re-verified and violations rejected.
TwoColoring build_witness_coloring(const std::vector<Component>& components,
                                   const std::vector<std::vector<int>>& iso_classes);

bool verify_distinguishing(const Graph& g, const TwoColoring& c);

}  // namespace d2c
