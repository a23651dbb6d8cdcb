#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclesat {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertex labels 0..n-1, adjacency kept as packed
// 64-bit rows. Instances are immutable once built ("G + e" is a fresh copy),
// so they are safe to share across threads.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n);
    // Validates endpoints, rejects self-loops, collapses duplicate edges.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    int size() const { return m_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    int degree(int v) const;

    const std::uint64_t* row(int v) const {
        return rows_.data() + static_cast<std::size_t>(v) * words_;
    }

    Graph with_edge(int u, int v) const;
    Graph without_vertex(int v) const;
    // Deletes a set of vertices; survivors are relabeled preserving order.
    Graph without_vertices(std::span<const int> verts) const;

    std::vector<int> neighbors(int v) const;  // ascending
    std::vector<Edge> edges() const;          // (u,v) with u<v, lexicographic

    template <class F>
    void for_neighbors(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t x = r[w];
            while (x) {
                f((w << 6) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;

    void add_edge_unchecked(int u, int v);
    friend Graph disjoint_union(const Graph&, const Graph&);
    friend class GraphBuilder;
};

// Mutable helper used by construction code; call take() to freeze.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);  // validates, ignores duplicates
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int order() const { return g_.order(); }
    Graph take() { return std::move(g_); }

private:
    Graph g_;
};

bool is_connected(const Graph& g);
// -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);
std::vector<int> component_ids(const Graph& g);  // 0-based component index per vertex
Graph disjoint_union(const Graph& a, const Graph& b);

// Induced subgraph on <=64 vertices with the original labels remembered;
// all search engines run on this compact form.
struct SubGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // one word per vertex
    std::vector<int> label;          // local -> original

    int degree(int v) const { return std::popcount(adj[v]); }
};

SubGraph induce(const Graph& g, std::span<const int> vertices);

}  // namespace cyclesat
