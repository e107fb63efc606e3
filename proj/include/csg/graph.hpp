#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csg/bitset.hpp"
#include "csg/errors.hpp"

namespace csg {

// Immutable simple undirected graph on dense vertex ids 0..n-1 with bitset
// adjacency rows. Optional per-vertex string labels remember the names a
// graph was parsed with.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw DomainError("vertex out of range");
        return adj_[u].test(v);
    }

    const Bitset& row(int v) const { return adj_[v]; }
    Bitset closed_row(int v) const {
        Bitset s = adj_[v];
        s.set(v);
        return s;
    }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;

    Bitset vertices() const { return Bitset::full(n_); }
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_labels(std::vector<std::string> labels);
    std::optional<int> vertex_by_label(const std::string& name) const;

private:
    friend Graph complement(const Graph&);
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

enum class GraphFormat { EdgeList, Graph6 };

Graph parse_edge_list(const std::string& text);
Graph parse_graph6(const std::string& text);
Graph parse_graph(const std::string& text, GraphFormat format);
std::string format_edge_list(const Graph& g);
std::string format_graph6(const Graph& g);
std::string format_graph(const Graph& g, GraphFormat format);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> origin; // new id -> original id
};

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& s);

// Exact isomorphism test; backtracking with color-refinement pruning.
// Public cap of 16 vertices; internal callers may raise it.
bool are_isomorphic(const Graph& g, const Graph& h, int cap = 16);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Vertices reachable from `sources` without entering `forbidden`.
Bitset reachable(const Graph& g, const Bitset& sources, const Bitset& forbidden);
bool is_connected(const Graph& g);
std::vector<Bitset> components(const Graph& g, const Bitset& within);

// Maximum cardinality search + perfect elimination ordering test.
bool is_chordal(const Graph& g);

} // namespace csg
