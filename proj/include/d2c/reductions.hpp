#pragma once

#include <optional>
#include <vector>

#include "d2c/graph.hpp"
#include "d2c/iso.hpp"

namespace d2c {

// Automorphism-to-coloring reduction: the output graph H is connected and
// has chi_D(H) > 2 exactly when the input has a nontrivial automorphism.

enum class GaToCcCase {
    Subdivided,    // output is the subdivision of the (possibly complemented) input
    K1NoInstance,  // input was K1, output is K1
};

struct GaToCcResult {
    Graph graph;
    std::optional<SubdivisionMap> map;  // present iff tag == Subdivided
    bool complemented = false;          // disconnected input was complemented first
    GaToCcCase tag = GaToCcCase::Subdivided;
};

GaToCcResult ga_to_cc(const Graph& g);

// f' on the subdivision: originals move as f, the vertex splitting edge uv
// moves to the vertex splitting edge f(u)f(v).
Permutation lift_nta_to_subdivision(const Permutation& f, const SubdivisionMap& m);

// Raised when an automorphism of the subdivision carries an original vertex
// onto an edge vertex, which only chordless cycles admit.
struct CycleCaseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Permutation restrict_nta_from_subdivision(const Permutation& f_prime, const SubdivisionMap& m);

// Coloring-to-automorphism reduction on connected graphs.

enum class CcToGaCase {
    K1OrK2,        // fixed NO instance: K1
    NonBipartite,  // fixed YES instance: K2
    Unbalanced,    // bipartition classes differ in size; output is the input itself
    Balanced,      // three-vertex tail attached to one bipartition class
};

struct GadgetMap {
    int source_n = 0;
    int a = 0, b = 0, c = 0;   // fresh ids n, n+1, n+2
    std::vector<int> x_class;  // the class a attaches to, ascending
};

struct CcToGaResult {
    Graph graph;
    CcToGaCase tag = CcToGaCase::Unbalanced;
    std::optional<GadgetMap> map;  // present iff tag == Balanced
};

CcToGaResult cc_to_ga(const Graph& g);

// Restriction of a gadget automorphism to the original vertices. The three
// added vertices are degree-forced fixed points; anything else is a bug.
Permutation restrict_gadget_nta(const Graph& gadget, const Permutation& f, const GadgetMap& m);

}  // namespace d2c
