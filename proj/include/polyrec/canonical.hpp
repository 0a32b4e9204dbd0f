#pragma once

#include <cstdint>
#include <vector>

#include "polyrec/graph.hpp"

namespace polyrec {

// Deterministic byte sequence; equal certificates <=> isomorphic graphs
// (color-preserving isomorphism for the colored variant).
using Certificate = std::vector<std::uint8_t>;

// Capacity of the uncolored public entry point. Colored certificates (used
// for vertex-facet incidence graphs) go up by kColoredCanonicalCap.
constexpr int kCanonicalCap = 16;
constexpr int kColoredCanonicalCap = 48;

// Canonical form of an uncolored graph. Full-permutation minimum for
// n <= 8, refinement + backtracking above that, up to kCanonicalCap.
Certificate canonical_form(const Graph& g);

// Canonical form respecting an initial vertex coloring: certificates are
// equal iff there is a color-preserving isomorphism.
Certificate canonical_form_colored(const Graph& g, const std::vector<int>& colors);

// Test hook: force the refinement engine on small graphs.
Certificate canonical_form_refinement(const Graph& g);

bool graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace polyrec
