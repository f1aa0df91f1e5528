#pragma once

#include "d2c/graph.hpp"

namespace d2c::oracle {

inline constexpr int kDefaultThreshold = 9;

/// All proper 2-colorings of g, or an empty list if g is not bipartite.
/// Exactly 2^k colorings for k components: index i swaps the colors of
/// component j iff bit j of i is set (components by smallest vertex id).
std::vector<TwoColoring> enumerate_proper_2_colorings(const Graph& g);

/// Definition-level test for chi_D(g) <= 2: some proper 2-coloring is
/// preserved by no nontrivial automorphism. The automorphism scan is a
/// complete backtracking enumeration; prefixes are abandoned only once
/// they already violate the color or adjacency constraints.
/// Shares no code with the iso engine.
bool brute_chi_d_le_2(const Graph& g, int threshold = kDefaultThreshold);

/// True iff the only automorphism of g is the identity, by scanning
/// every permutation of the vertices.
bool brute_is_asymmetric(const Graph& g, int threshold = kDefaultThreshold);

}  // namespace d2c::oracle
