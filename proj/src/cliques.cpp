#include "csg/cliques.hpp"

#include <algorithm>

namespace csg {

namespace {

void bron_kerbosch(const Graph& g, Bitset r, Bitset p, Bitset x,
                   std::vector<Bitset>& out, std::size_t cap) {
    if (p.none() && x.none()) {
        if (out.size() >= cap)
            throw CapacityError("maximal clique count exceeds cap of " + std::to_string(cap));
        out.push_back(r);
        return;
    }
    // pivot: max degree within P, ties by smallest id
    int pivot = -1, best = -1;
    Bitset px = p | x;
    for (int u : px) {
        int d = (g.row(u) & p).count();
        if (d > best) {
            best = d;
            pivot = u;
        }
    }
    Bitset ext = p.minus(g.row(pivot));
    for (int v : ext) {
        Bitset r2 = r;
        r2.set(v);
        bron_kerbosch(g, r2, p & g.row(v), x & g.row(v), out, cap);
        p.reset(v);
        x.set(v);
    }
}

// lexicographic smallest-member-first order on vertex sets
bool set_less(const Bitset& a, const Bitset& b) {
    Bitset d = a ^ b;
    int m = d.first();
    if (m < 0) return false;
    return a.test(m);
}

} // namespace

CliqueHypergraph maximal_cliques(const Graph& g, std::size_t cap) {
    CliqueHypergraph k;
    int n = g.order();
    if (n > 0) bron_kerbosch(g, Bitset(n), Bitset::full(n), Bitset(n), k.cliques, cap);
    std::sort(k.cliques.begin(), k.cliques.end(), set_less);
    k.incidence.assign(n, {});
    for (int i = 0; i < k.count(); ++i)
        for (int v : k.cliques[i]) k.incidence[v].push_back(i);
    return k;
}

Graph clique_linegraph(const CliqueHypergraph& k) {
    int m = k.count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (k.cliques[i].intersects(k.cliques[j])) edges.emplace_back(i, j);
    return Graph::from_edges(m, edges);
}

} // namespace csg
