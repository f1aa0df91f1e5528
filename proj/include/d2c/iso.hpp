#pragma once

#include "d2c/graph.hpp"

namespace d2c {

/// Vertex bijection; p[v] is the image of v.
struct Permutation {
    std::vector<int> p;

    Permutation() = default;
    explicit Permutation(std::vector<int> v) : p(std::move(v)) {}
    static Permutation identity(int n);

    int size() const { return static_cast<int>(p.size()); }
    int operator[](int v) const { return p[v]; }
    bool is_identity() const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
};

/// (outer . inner)[v] = outer[inner[v]]
Permutation compose(const Permutation& outer, const Permutation& inner);

bool is_valid_permutation(const Permutation& p, int n);
bool is_automorphism(const Graph& g, const Permutation& p);
bool is_isomorphism(const Graph& g1, const Graph& g2, const Permutation& p);
bool preserves_coloring(const TwoColoring& c, const Permutation& p);

/// Graph with every edge {u, v} replaced by {p[u], p[v]}.
Graph relabel(const Graph& g, const Permutation& p);

/// Sequence of disjoint, nonempty vertex cells covering [0, n);
/// cell order is significant. Cells are kept sorted ascending.
struct OrderedPartition {
    std::vector<std::vector<int>> cells;

    static OrderedPartition unit(int n);
    // Color-1 cell first, then color-2; empty classes are dropped.
    static OrderedPartition from_coloring(const TwoColoring& c);

    bool is_valid(int n) const;
    bool is_discrete() const;
    bool operator==(const OrderedPartition&) const = default;
};

/// Equitable refinement of `initial` (1-dimensional Weisfeiler-Leman).
/// Cells split by the multiset of neighbor cell indices; fragments are
/// ordered by that multiset, so the result is isomorphism-invariant.
OrderedPartition color_refine(const Graph& g, const OrderedPartition& initial);

struct CanonicalForm {
    Permutation labeling;  // maps g onto canon
    Graph canon;
    std::string key;  // equality key; graph6 of canon (+ color class sizes)
};

/// Individualization-refinement canonical labeling. The representative is
/// the lexicographically least graph6 string over the leaf labelings.
/// With colors, only color-preserving labelings are considered and the
/// two color values are distinguished absolutely (no swap).
CanonicalForm canonical_form(const Graph& g, const std::optional<TwoColoring>& colors = {});

std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2);

/// A nontrivial automorphism of g, if any (GA). The certificate is
/// re-verified before it is returned.
std::optional<Permutation> has_nta(const Graph& g);

/// A nontrivial automorphism p with c[p[v]] == c[v] for all v, if any.
/// Works on disconnected graphs; c need not be proper.
std::optional<Permutation> has_color_preserving_nta(const Graph& g, const TwoColoring& c);

inline constexpr int kBruteForceThreshold = 9;

// Independent exhaustive-enumeration oracles; no code shared with the
// search engine above.
std::optional<Permutation> brute_force_nta(const Graph& g, int threshold = kBruteForceThreshold);
std::optional<Permutation> brute_force_isomorphic(const Graph& g1, const Graph& g2,
                                                  int threshold = kBruteForceThreshold);

}  // namespace d2c
