#include "cyclesat/graph.hpp"

#include <algorithm>
#include <bit>

namespace cyclesat {

namespace {
void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
}
}  // namespace

Graph Graph::empty(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.words_ = n == 0 ? 1 : (n + 63) / 64;
    g.rows_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    return g;
}

void Graph::add_edge_unchecked(int u, int v) {
    std::uint64_t& ru = rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
    if ((ru >> (v & 63)) & 1u) return;
    ru |= 1ull << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
    ++m_;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.add_edge_unchecked(u, v);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) throw std::invalid_argument("self-loop");
    Graph g = *this;
    g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::without_vertex(int v) const {
    int vv[1] = {v};
    return without_vertices(vv);
}

Graph Graph::without_vertices(std::span<const int> verts) const {
    std::vector<char> drop(n_, 0);
    for (int v : verts) {
        check_vertex(v, n_);
        drop[v] = 1;
    }
    std::vector<int> remap(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (!drop[v]) remap[v] = next++;
    Graph g = empty(next);
    for (int v = 0; v < n_; ++v) {
        if (drop[v]) continue;
        for_neighbors(v, [&](int u) {
            if (u > v && !drop[u]) g.add_edge_unchecked(remap[v], remap[u]);
        });
    }
    return g;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for_neighbors(v, [&](int u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int v = 0; v < n_; ++v)
        for_neighbors(v, [&](int u) {
            if (u > v) out.emplace_back(v, u);
        });
    return out;
}

GraphBuilder::GraphBuilder(int n) : g_(Graph::empty(n)) {}

void GraphBuilder::add_edge(int u, int v) {
    check_vertex(u, g_.order());
    check_vertex(v, g_.order());
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g_.add_edge_unchecked(u, v);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> queue;
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        g.for_neighbors(v, [&](int u) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    int next = 0;
    std::vector<int> queue;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            g.for_neighbors(v, [&](int u) {
                if (comp[u] < 0) {
                    comp[u] = next;
                    queue.push_back(u);
                }
            });
        }
        ++next;
    }
    return comp;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g = Graph::empty(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge_unchecked(u, v);
    int off = a.order();
    for (auto [u, v] : b.edges()) g.add_edge_unchecked(u + off, v + off);
    return g;
}

SubGraph induce(const Graph& g, std::span<const int> vertices) {
    if (vertices.size() > 64)
        throw std::invalid_argument("induced search graph limited to 64 vertices");
    SubGraph s;
    s.n = static_cast<int>(vertices.size());
    s.label.assign(vertices.begin(), vertices.end());
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < s.n; ++i) local[s.label[i]] = i;
    s.adj.assign(s.n, 0);
    for (int i = 0; i < s.n; ++i) {
        g.for_neighbors(s.label[i], [&](int u) {
            if (local[u] >= 0) s.adj[i] |= 1ull << local[u];
        });
    }
    return s;
}

}  // namespace cyclesat
