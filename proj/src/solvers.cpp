#include "csg/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace csg {

namespace {

void mis_rec(const Graph& g, Bitset cand, int current, int& best) {
    if (current + cand.count() <= best) return;
    int v = -1, deg = -1;
    for (int u : cand) {
        int d = (g.row(u) & cand).count();
        if (d > deg) {
            deg = d;
            v = u;
        }
    }
    if (v < 0) {
        best = std::max(best, current);
        return;
    }
    if (deg == 0) {
        best = std::max(best, current + cand.count());
        return;
    }
    Bitset incl = cand.minus(g.row(v));
    incl.reset(v);
    mis_rec(g, incl, current + 1, best);
    cand.reset(v);
    mis_rec(g, cand, current, best);
}

struct LocalAdj {
    std::vector<Bitset> adj; // over local ids
    int n() const { return static_cast<int>(adj.size()); }
};

// complement of G restricted to `within`, on local ids
LocalAdj restricted_complement(const Graph& g, const Bitset& within) {
    std::vector<int> verts = within.to_vector();
    int m = static_cast<int>(verts.size());
    LocalAdj la;
    la.adj.assign(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!g.adjacent(verts[i], verts[j])) {
                la.adj[i].set(j);
                la.adj[j].set(i);
            }
    return la;
}

int greedy_coloring(const LocalAdj& h, const std::vector<int>& order) {
    int n = h.n();
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v : order) {
        std::vector<char> busy(used + 1, 0);
        for (int w : h.adj[v])
            if (color[w] >= 0) busy[color[w]] = 1;
        int c = 0;
        while (c < used && busy[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

void coloring_rec(const LocalAdj& h, const std::vector<int>& order, size_t idx,
                  std::vector<int>& color, int used, int& best) {
    if (used >= best) return;
    if (idx == order.size()) {
        best = used;
        return;
    }
    int v = order[idx];
    for (int c = 0; c <= used && c < best; ++c) {
        if (c == used && used + 1 >= best) break;
        bool ok = true;
        for (int w : h.adj[v])
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        coloring_rec(h, order, idx + 1, color, std::max(used, c + 1), best);
        color[v] = -1;
    }
}

int chromatic_number(const LocalAdj& h, int lower_bound) {
    int n = h.n();
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = h.adj[a].count(), db = h.adj[b].count();
        if (da != db) return da > db;
        return a < b;
    });
    int best = greedy_coloring(h, order);
    if (best <= lower_bound) return best;
    std::vector<int> color(n, -1);
    coloring_rec(h, order, 0, color, 0, best);
    return best;
}

} // namespace

int independence_number(const Graph& g, const Bitset& within) {
    int best = 0;
    mis_rec(g, within, 0, best);
    return best;
}

int clique_number(const Graph& g, const Bitset& within) {
    return independence_number(complement(g), within);
}

int clique_cover_number(const Graph& g, const Bitset& within) {
    if (within.none()) return 0;
    LocalAdj la = restricted_complement(g, within);
    // alpha(G[within]) is a clique in the complement, hence a lower bound
    int lb = independence_number(g, within);
    return chromatic_number(la, lb);
}

int local_independence_number(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, independence_number(g, g.closed_row(v)));
    return best;
}

int local_clique_cover_number(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, clique_cover_number(g, g.closed_row(v)));
    return best;
}

} // namespace csg
