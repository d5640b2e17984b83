#include "pdcost/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pdcost {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (g.adj_[u].test(v)) throw std::invalid_argument("duplicate edge");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    g.m_ = int(edges.size());
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

namespace {

// strict non-negative integer parse; rejects trailing junk
bool parse_int(std::string_view tok, long& out) {
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc() && res.ptr == tok.data() + tok.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> seen;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;

        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            if (!parse_int(toks[2], n) || !parse_int(toks[3], m))
                throw ParseError(lineno, "bad vertex or edge count");
            if (n < 1) throw ParseError(lineno, "graph needs at least one vertex");
            seen.assign(n, VertexSet(int(n)));
        } else if (toks[0] == "e") {
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            long u, v;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw ParseError(lineno, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "self-loop");
            int a = int(u - 1), b = int(v - 1);
            if (seen[a].test(b)) throw ParseError(lineno, "duplicate edge");
            seen[a].set(b);
            seen[b].set(a);
            edges.emplace_back(a, b);
        } else {
            throw ParseError(lineno, "unrecognized line");
        }
    }

    if (n < 0) throw ParseError(0, "missing problem line");
    if (long(edges.size()) != m)
        throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
    return Graph::from_edges(int(n), edges);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    s.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h, int vertex_cap) {
    long long total = (long long)g.vertex_count() * h.vertex_count();
    if (total > vertex_cap)
        throw CapExceededError("cartesian product exceeds vertex cap", std::to_string(total));
    int nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (auto [j, j2] : h.edges()) edges.emplace_back(i * nh + j, i * nh + j2);
    for (auto [i, i2] : g.edges())
        for (int j = 0; j < nh; ++j) edges.emplace_back(i * nh + j, i2 * nh + j);
    return Graph::from_edges(int(total), edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("clique needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const std::vector<Graph>& parts, int vertex_cap) {
    if (parts.empty()) throw std::invalid_argument("disjoint union of nothing");
    long long total = 0;
    for (const auto& p : parts) total += p.vertex_count();
    if (total > vertex_cap)
        throw CapExceededError("disjoint union exceeds vertex cap", std::to_string(total));
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) edges.emplace_back(base + u, base + v);
        base += p.vertex_count();
    }
    return Graph::from_edges(int(total), edges);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> to_old = keep.to_vector();
    if (to_old.empty()) throw std::invalid_argument("induced subgraph needs a nonempty set");
    std::vector<int> to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (to_new[u] >= 0 && to_new[v] >= 0) edges.emplace_back(to_new[u], to_new[v]);
    return {Graph::from_edges(int(to_old.size()), edges), std::move(to_old)};
}

std::vector<int> closed_twin_reduction(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> closed(n, VertexSet(n));
    for (int v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);

    std::vector<int> keep;
    for (int u = 0; u < n; ++u) {
        bool dominated = false;
        for (int v = 0; v < n && !dominated; ++v) {
            if (v == u || !closed[u].is_subset_of(closed[v])) continue;
            if (closed[u] == closed[v]) {
                if (v < u) dominated = true;  // keep smallest label of the twin class
            } else {
                dominated = true;
            }
        }
        if (!dominated) keep.push_back(u);
    }
    return keep;
}

int component_count(const Graph& g) {
    int n = g.vertex_count();
    VertexSet visited(n);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (visited.test(s)) continue;
        ++comps;
        std::vector<int> stack{s};
        visited.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.neighbors(v).for_each([&](int w) {
                if (!visited.test(w)) {
                    visited.set(w);
                    stack.push_back(w);
                }
            });
        }
    }
    return comps;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

}  // namespace pdcost
