#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdcost/bitset.hpp"
#include "pdcost/errors.hpp"

namespace pdcost {

// Default hard cap on constructed graph sizes. The realizability construction
// grows quartically, so constructions check against a cap and fail loudly
// instead of allocating without bound.
inline constexpr int kDefaultVertexCap = 4096;

// Immutable simple undirected graph on vertices 0..n-1 with per-vertex
// adjacency bitmasks. No self-loops, no multi-edges.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return adj_[v].count(); }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[v];
        s.set(v);
        return s;
    }

    // Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    Graph() = default;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// DIMACS-like format: optional `c` comment lines, one `p edge <n> <m>` header,
// then m lines `e <u> <v>` with 1-based endpoints. Throws ParseError naming the
// offending line on malformed input, duplicate edges, self-loops, or
// out-of-range vertex ids.
Graph parse_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

// Emits the same format with edges sorted lexicographically; parse ∘ serialize
// is the identity on normalized graphs.
std::string serialize_graph(const Graph& g);

// N[S] = S ∪ ⋃_{v∈S} N(v).
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// Vertices (i,j) in row-major order; (i,j)~(i',j') iff i=i' and jj'∈E(h), or
// j=j' and ii'∈E(g).
Graph cartesian_product(const Graph& g, const Graph& h, int vertex_cap = kDefaultVertexCap);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const std::vector<Graph>& parts, int vertex_cap = kDefaultVertexCap);

// Induced subgraph on the vertices of `keep`; second element maps new ids to
// original ids (ascending).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);

// Solver candidate filter. Drops every vertex whose closed neighborhood is a
// strict subset of another vertex's, and keeps only the smallest label among
// vertices with identical closed neighborhoods. For every budget k some
// maxObs-achieving set uses only returned vertices, since N[u] ⊆ N[v] implies
// Obs(S∪{u}) ⊆ Obs(S∪{v}).
std::vector<int> closed_twin_reduction(const Graph& g);

int component_count(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace pdcost
