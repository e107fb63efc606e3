#pragma once

#include <cstddef>
#include <vector>

#include "csg/graph.hpp"

namespace csg {

// The hypergraph of all maximal cliques of a graph, in lexicographic
// smallest-member-first order, plus the vertex -> clique incidence index.
struct CliqueHypergraph {
    std::vector<Bitset> cliques;
    std::vector<std::vector<int>> incidence; // vertex -> indices into cliques

    int count() const { return static_cast<int>(cliques.size()); }
};

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

// Pivoting branch-and-bound enumeration over bitsets. Aborts with a
// CapacityError once more than `cap` cliques are produced.
CliqueHypergraph maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

// One vertex per maximal clique, edges between distinct intersecting cliques.
Graph clique_linegraph(const CliqueHypergraph& k);

} // namespace csg
