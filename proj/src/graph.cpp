#include "csg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace csg {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw DomainError("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loop");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) es.emplace_back(u, v);
    return es;
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[v];
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_) throw DomainError("label count mismatch");
    labels_ = std::move(labels);
}

std::optional<int> Graph::vertex_by_label(const std::string& name) const {
    if (labels_.empty()) {
        // Unlabelled graphs are addressed by their dense ids.
        try {
            size_t pos = 0;
            int v = std::stoi(name, &pos);
            if (pos == name.size() && v >= 0 && v < n_) return v;
        } catch (...) {
        }
        return std::nullopt;
    }
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == name) return v;
    return std::nullopt;
}

// ---------------------------------------------------------------- edge list

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<long long, long long>> raw_edges;
    std::vector<int> edge_line;
    long long declared_n = -1;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank
        if (a == "n") {
            if (declared_n >= 0) throw ParseError("duplicate header", lineno);
            if (!raw_edges.empty()) throw ParseError("header after edges", lineno);
            if (!(ls >> b) || (ls >> extra)) throw ParseError("malformed header", lineno);
            try {
                declared_n = std::stoll(b);
            } catch (...) {
                throw ParseError("malformed header", lineno);
            }
            if (declared_n < 0) throw ParseError("negative vertex count", lineno);
            continue;
        }
        if (!(ls >> b) || (ls >> extra)) throw ParseError("expected 'u v'", lineno);
        long long u, v;
        try {
            size_t pa = 0, pb = 0;
            u = std::stoll(a, &pa);
            v = std::stoll(b, &pb);
            if (pa != a.size() || pb != b.size()) throw ParseError("", 0);
        } catch (...) {
            throw ParseError("expected non-negative integers", lineno);
        }
        if (u < 0 || v < 0) throw ParseError("negative vertex name", lineno);
        if (u == v) throw ParseError("self-loop", lineno);
        raw_edges.emplace_back(u, v);
        edge_line.push_back(lineno);
    }

    // Compact names to 0..n-1 in first-appearance order.
    std::map<long long, int> id;
    std::vector<long long> name;
    auto intern = [&](long long x) {
        auto it = id.find(x);
        if (it != id.end()) return it->second;
        int nid = static_cast<int>(name.size());
        id.emplace(x, nid);
        name.push_back(x);
        return nid;
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges) edges.emplace_back(intern(u), intern(v));

    int named = static_cast<int>(name.size());
    int n = named;
    if (declared_n >= 0) {
        if (declared_n < named) throw ParseError("header count smaller than named vertices", 0);
        n = static_cast<int>(declared_n);
    }

    Graph g(n);
    std::vector<std::string> labels(n);
    for (int v = 0; v < named; ++v) labels[v] = std::to_string(name[v]);
    for (int v = named; v < n; ++v) labels[v] = std::to_string(v);

    Bitset seen_dup(n); // scratch for duplicate detection, per endpoint
    (void)seen_dup;
    std::vector<Bitset> adj(n, Bitset(n));
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (adj[u].test(v)) throw ParseError("duplicate edge", edge_line[i]);
        adj[u].set(v);
        adj[v].set(u);
    }
    g = Graph::from_edges(n, edges);
    g.set_labels(std::move(labels));
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

// ------------------------------------------------------------------ graph6

Graph parse_graph6(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw ParseError("empty graph6 text");

    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) throw ParseError("truncated graph6 text");
    };
    auto val = [&](size_t i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
        return static_cast<int>(c - 63);
    };

    long long n;
    if (s[0] != '~') {
        n = val(0);
        pos = 1;
    } else {
        need(2);
        if (s[1] != '~') {
            need(4);
            n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
            pos = 4;
        } else {
            throw CapacityError("graph6 order beyond supported range");
        }
    }
    if (n > 100000) throw CapacityError("graph6 order beyond supported range");

    long long bits = n * (n - 1) / 2;
    size_t body = static_cast<size_t>((bits + 5) / 6);
    need(body);
    if (pos + body != s.size()) throw ParseError("graph6 length mismatch");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int group = val(pos + static_cast<size_t>(bit / 6));
            int b = (group >> (5 - (bit % 6))) & 1;
            if (b) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (long long t = bits; t < static_cast<long long>(body) * 6; ++t) {
        int group = val(pos + static_cast<size_t>(t / 6));
        if ((group >> (5 - (t % 6))) & 1) throw ParseError("nonzero graph6 padding");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string format_graph6(const Graph& g) {
    int n = g.order();
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back('~');
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++k == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                k = 0;
            }
        }
    }
    if (k > 0) s.push_back(static_cast<char>((acc << (6 - k)) + 63));
    return s;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string format_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::EdgeList ? format_edge_list(g) : format_graph6(g);
}

// ------------------------------------------------------------- subgraphs

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& s) {
    if (s.universe() != g.order()) throw DomainError("vertex set universe mismatch");
    std::vector<int> origin = s.to_vector();
    int m = static_cast<int>(origin.size());
    std::vector<int> newid(g.order(), -1);
    for (int i = 0; i < m; ++i) newid[origin[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        Bitset nb = g.row(origin[i]) & s;
        for (int w : nb)
            if (newid[w] > i) edges.emplace_back(i, newid[w]);
    }
    InducedSubgraph out{Graph::from_edges(m, edges), std::move(origin)};
    return out;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int v = 0; v < g.order(); ++v) {
        c.adj_[v] = g.row(v).complemented();
        c.adj_[v].reset(v);
    }
    return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(a.order() + b.order(), edges);
}

// ------------------------------------------------------------ isomorphism

namespace {

// Iterated colour refinement; returns stable colour per vertex.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int w : g.row(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::vector<std::pair<int, std::vector<int>>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == color) break;
        color = next;
    }
    return color;
}

bool iso_backtrack(const Graph& g, const Graph& h, const std::vector<int>& cg,
                   const std::vector<int>& ch, std::vector<int>& map_gh,
                   std::vector<char>& used, int idx, const std::vector<int>& order) {
    int n = g.order();
    if (idx == n) return true;
    int u = order[idx];
    for (int v = 0; v < n; ++v) {
        if (used[v] || ch[v] != cg[u]) continue;
        bool ok = true;
        for (int j = 0; j < idx && ok; ++j) {
            int u2 = order[j];
            if (g.adjacent(u, u2) != h.adjacent(v, map_gh[u2])) ok = false;
        }
        if (!ok) continue;
        map_gh[u] = v;
        used[v] = 1;
        if (iso_backtrack(g, h, cg, ch, map_gh, used, idx + 1, order)) return true;
        used[v] = 0;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& g, const Graph& h, int cap) {
    if (g.order() > cap || h.order() > cap)
        throw CapacityError("isomorphism test capped at " + std::to_string(cap) + " vertices");
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    int n = g.order();
    if (n == 0) return true;

    std::vector<int> cg = refine_colors(g), ch = refine_colors(h);
    auto hist = [n](const std::vector<int>& c) {
        std::vector<int> s = c;
        std::sort(s.begin(), s.end());
        (void)n;
        return s;
    };
    if (hist(cg) != hist(ch)) return false;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    // most constrained vertices first: rare colours, then high degree
    std::vector<int> freq(n, 0);
    for (int v = 0; v < n; ++v) ++freq[cg[v]];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (freq[cg[a]] != freq[cg[b]]) return freq[cg[a]] < freq[cg[b]];
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<int> map_gh(n, -1);
    std::vector<char> used(n, 0);
    return iso_backtrack(g, h, cg, ch, map_gh, used, 0, order);
}

// ------------------------------------------------------------ traversal

Bitset reachable(const Graph& g, const Bitset& sources, const Bitset& forbidden) {
    Bitset seen = sources.minus(forbidden);
    Bitset frontier = seen;
    while (frontier.any()) {
        Bitset next(g.order());
        for (int v : frontier) next |= g.row(v);
        next = next.minus(seen).minus(forbidden);
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    Bitset src(g.order());
    src.set(0);
    return reachable(g, src, Bitset(g.order())).count() == g.order();
}

std::vector<Bitset> components(const Graph& g, const Bitset& within) {
    std::vector<Bitset> comps;
    Bitset left = within;
    while (left.any()) {
        int v = left.first();
        Bitset src(g.order());
        src.set(v);
        Bitset comp = reachable(g, src, within.complemented());
        comps.push_back(comp);
        left = left.minus(comp);
    }
    return comps;
}

// ------------------------------------------------------------- chordality

bool is_chordal(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    // maximum cardinality search
    std::vector<int> weight(n, 0), pos(n, -1), order(n);
    std::vector<char> numbered(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
        order[i] = best;
        pos[best] = i;
        numbered[best] = 1;
        for (int w : g.row(best))
            if (!numbered[w]) ++weight[w];
    }
    // elimination order = order[0..n-1]; Tarjan-Yannakakis fill check
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        Bitset later = g.row(v);
        Bitset after(n);
        for (int w : later)
            if (pos[w] > i) after.set(w);
        if (after.none()) continue;
        int parent = -1, bestpos = n + 1;
        for (int w : after)
            if (pos[w] < bestpos) {
                bestpos = pos[w];
                parent = w;
            }
        Bitset rest = after;
        rest.reset(parent);
        if (!rest.subset_of(g.row(parent))) return false;
    }
    return true;
}

} // namespace csg
