#include "cyclesat/blocks.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cyclesat {

namespace {

struct Tarjan {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> cut;
    std::vector<Edge> estack;
    std::vector<std::vector<Edge>> block_edges;
    int timer = 0;

    explicit Tarjan(const Graph& gr)
        : g(gr), disc(gr.order(), 0), low(gr.order(), 0), cut(gr.order(), 0) {}

    void pop_block(const Edge& until) {
        std::vector<Edge> comp;
        while (true) {
            Edge e = estack.back();
            estack.pop_back();
            comp.push_back(e);
            if (e == until) break;
        }
        block_edges.push_back(std::move(comp));
    }

    void dfs(int root) {
        // Iterative DFS so deep pendant paths cannot overflow the stack.
        struct Frame {
            int v;
            int parent;
            std::vector<int> nbrs;
            std::size_t next = 0;
            int children = 0;
        };
        std::vector<Frame> st;
        st.push_back({root, -1, g.neighbors(root)});
        disc[root] = low[root] = ++timer;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.next < f.nbrs.size()) {
                int u = f.nbrs[f.next++];
                if (u == f.parent) continue;
                if (disc[u] == 0) {
                    estack.push_back({f.v, u});
                    disc[u] = low[u] = ++timer;
                    st.push_back({u, f.v, g.neighbors(u)});
                } else if (disc[u] < disc[f.v]) {
                    estack.push_back({f.v, u});
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                Frame done = std::move(st.back());
                st.pop_back();
                if (st.empty()) break;
                Frame& p = st.back();
                ++p.children;
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (low[done.v] >= disc[p.v]) {
                    if (p.parent != -1 || p.children > 1) cut[p.v] = 1;
                    pop_block({p.v, done.v});
                }
            }
        }
    }

    void run() {
        for (int v = 0; v < g.order(); ++v)
            if (disc[v] == 0) dfs(v);
    }
};

BlockKind classify(const Graph& g, const std::vector<int>& verts, std::size_t edge_count,
                   std::vector<int>& centers) {
    std::size_t nb = verts.size();
    if (nb == 2) return BlockKind::k2;
    if (nb == 3) return BlockKind::k3;
    if (nb == 4) return edge_count == 6 ? BlockKind::k4 : BlockKind::other;
    if (nb == 5) return edge_count == 10 ? BlockKind::k5 : BlockKind::other;
    if (nb > 64) return BlockKind::other;

    SubGraph s = induce(g, verts);

    // D(a,b): unique dominating vertex t1, two further vertices t2,t3 of
    // degree >= 3 adjacent to each other, everything else of degree 2 split
    // into a >= 2 vertices on {t1,t2} and b >= 2 on {t1,t3}.
    if (nb >= 7) {
        int t1 = -1;
        bool unique = true;
        for (int v = 0; v < s.n; ++v)
            if (s.degree(v) == s.n - 1) {
                if (t1 >= 0) unique = false;
                t1 = v;
            }
        if (t1 >= 0 && unique) {
            std::vector<int> hubs, rim;
            for (int v = 0; v < s.n; ++v) {
                if (v == t1) continue;
                (s.degree(v) >= 3 ? hubs : rim).push_back(v);
            }
            if (hubs.size() == 2 && ((s.adj[hubs[0]] >> hubs[1]) & 1u)) {
                int t2 = hubs[0], t3 = hubs[1];
                int a = 0, b = 0;
                bool ok = true;
                for (int v : rim) {
                    std::uint64_t nb_mask = s.adj[v];
                    if (nb_mask == ((1ull << t1) | (1ull << t2)))
                        ++a;
                    else if (nb_mask == ((1ull << t1) | (1ull << t3)))
                        ++b;
                    else
                        ok = false;
                }
                if (ok && a >= 2 && b >= 2 &&
                    edge_count == 3 + 2 * static_cast<std::size_t>(a + b)) {
                    centers = {s.label[t1], s.label[t2], s.label[t3]};
                    return BlockKind::d_family;
                }
            }
        }
    }

    // H(t,6,2): a K4 plus t-4 >= 2 degree-2 vertices all joined to one fixed
    // pair of clique vertices (the centers).
    {
        std::vector<int> indep, clique;
        for (int v = 0; v < s.n; ++v) (s.degree(v) == 2 ? indep : clique).push_back(v);
        if (clique.size() == 4 && indep.size() == nb - 4 && indep.size() >= 2) {
            bool k4 = true;
            for (int i = 0; i < 4 && k4; ++i)
                for (int j = i + 1; j < 4 && k4; ++j)
                    k4 = (s.adj[clique[i]] >> clique[j]) & 1u;
            if (k4) {
                std::uint64_t pair_mask = s.adj[indep[0]];
                bool same = true;
                for (int v : indep) same = same && s.adj[v] == pair_mask;
                std::uint64_t qmask = 0;
                for (int q : clique) qmask |= 1ull << q;
                if (same && (pair_mask & ~qmask) == 0 &&
                    edge_count == 6 + 2 * indep.size()) {
                    centers.clear();
                    for (int q : clique)
                        if ((pair_mask >> q) & 1u) centers.push_back(s.label[q]);
                    return BlockKind::h_family;
                }
            }
        }
    }
    return BlockKind::other;
}

}  // namespace

std::vector<std::vector<int>> biconnected_vertex_sets(const Graph& g) {
    Tarjan t(g);
    t.run();
    std::vector<std::vector<int>> out;
    out.reserve(t.block_edges.size());
    for (auto& edges : t.block_edges) {
        std::vector<int> verts;
        for (auto [u, v] : edges) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("block_decomposition: disconnected input");
    Tarjan t(g);
    t.run();

    BlockDecomposition bd;
    bd.is_cut = t.cut;
    bd.blocks_of.assign(g.order(), {});
    for (auto& edges : t.block_edges) {
        Block blk;
        std::vector<int> verts;
        for (auto [u, v] : edges) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blk.vertices = std::move(verts);
        for (auto [u, v] : edges) blk.edges.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(blk.edges.begin(), blk.edges.end());
        blk.kind = classify(g, blk.vertices, blk.edges.size(), blk.centers);
        int idx = static_cast<int>(bd.blocks.size());
        for (int v : blk.vertices) bd.blocks_of[v].push_back(idx);
        switch (blk.kind) {
            case BlockKind::k2: bd.b2++; bd.bridge_blocks.push_back(idx); break;
            case BlockKind::k3: bd.b3++; break;
            case BlockKind::k4: bd.b4++; break;
            case BlockKind::k5: bd.b5++; break;
            case BlockKind::d_family: bd.d_count++; break;
            case BlockKind::h_family: bd.h_count++; break;
            case BlockKind::other: break;
        }
        bd.blocks.push_back(std::move(blk));
    }

    // Block-cut tree.
    int nblocks = static_cast<int>(bd.blocks.size());
    bd.cut_node_.assign(g.order(), -1);
    bd.node_vertex_.assign(nblocks, -1);
    int next = nblocks;
    for (int v = 0; v < g.order(); ++v)
        if (bd.is_cut[v]) {
            bd.cut_node_[v] = next++;
            bd.node_vertex_.push_back(v);
        }
    bd.tree_adj_.assign(next, {});
    for (int b = 0; b < nblocks; ++b)
        for (int v : bd.blocks[b].vertices)
            if (bd.cut_node_[v] >= 0) {
                bd.tree_adj_[b].push_back(bd.cut_node_[v]);
                bd.tree_adj_[bd.cut_node_[v]].push_back(b);
            }
    return bd;
}

std::vector<BlockDecomposition::RouteStep> BlockDecomposition::route(int u, int v) const {
    if (u == v) throw std::invalid_argument("route: identical endpoints");
    auto node_of = [&](int x) { return cut_node_[x] >= 0 ? cut_node_[x] : blocks_of[x][0]; };
    int src = node_of(u), dst = node_of(v);

    std::vector<int> parent(tree_adj_.size(), -2);
    parent[src] = -1;
    std::vector<int> queue{src};
    for (std::size_t head = 0; head < queue.size() && parent[dst] == -2; ++head) {
        int x = queue[head];
        for (int y : tree_adj_[x])
            if (parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    std::vector<int> path;
    for (int x = dst; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());

    int nblocks = static_cast<int>(blocks.size());
    std::vector<RouteStep> steps;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= nblocks) continue;  // cut-vertex node
        RouteStep s;
        s.block = path[i];
        s.in = i > 0 ? node_vertex_[path[i - 1]] : u;
        s.out = i + 1 < path.size() ? node_vertex_[path[i + 1]] : v;
        steps.push_back(s);
    }
    return steps;
}

bool b2_is_matching(const Graph& g) {
    BlockDecomposition bd = block_decomposition(g);
    std::vector<char> used(g.order(), 0);
    for (int b : bd.bridge_blocks)
        for (int v : bd.blocks[b].vertices) {
            if (used[v]) return false;
            used[v] = 1;
        }
    return true;
}

}  // namespace cyclesat
