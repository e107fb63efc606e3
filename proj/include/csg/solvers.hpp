#pragma once

#include "csg/graph.hpp"

namespace csg {

// Exact branch-and-bound solvers for the small measures used throughout.
// All operate on an induced subset so callers can avoid building subgraphs.

int independence_number(const Graph& g, const Bitset& within);
inline int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

int clique_number(const Graph& g, const Bitset& within);
inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

// Minimum number of cliques of G[within] covering `within` (chromatic number
// of the complement, DSATUR-style branch and bound).
int clique_cover_number(const Graph& g, const Bitset& within);
inline int clique_cover_number(const Graph& g) { return clique_cover_number(g, g.vertices()); }

int local_independence_number(const Graph& g);
int local_clique_cover_number(const Graph& g);

} // namespace csg
