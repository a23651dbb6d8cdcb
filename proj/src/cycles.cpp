#include "cyclesat/cycles.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace cyclesat {

namespace {

struct Budget {
    std::uint64_t left;
    explicit Budget(const SearchLimits& lim) : left(lim.max_nodes) {}
    void tick(std::uint64_t k = 1) {
        if (left < k) throw ResourceExhausted("search node budget exhausted");
        left -= k;
    }
};

std::uint64_t all_mask(int n) { return n == 64 ? ~0ull : ((1ull << n) - 1); }

// Vertices reachable from `from` through unvisited vertices; includes `from`.
std::uint64_t reach(const SubGraph& s, int from, std::uint64_t visited) {
    std::uint64_t avail = ~visited & all_mask(s.n);
    std::uint64_t seen = 1ull << from;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t nxt = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            nxt |= s.adj[v];
        }
        nxt &= avail & ~seen;
        seen |= nxt;
        frontier = nxt;
    }
    return seen;
}

// BFS distances from `from` through unvisited vertices (-1 unreachable).
void reach_dists(const SubGraph& s, int from, std::uint64_t visited, int* dist) {
    std::fill(dist, dist + s.n, -1);
    std::uint64_t avail = ~visited & all_mask(s.n);
    dist[from] = 0;
    std::uint64_t frontier = 1ull << from, seen = frontier;
    int d = 0;
    while (frontier) {
        std::uint64_t nxt = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            nxt |= s.adj[v];
        }
        nxt &= avail & ~seen;
        ++d;
        std::uint64_t m = nxt;
        while (m) {
            dist[std::countr_zero(m)] = d;
            m &= m - 1;
        }
        seen |= nxt;
        frontier = nxt;
    }
}

// ---------------------------------------------------------------------------
// Subset DP over one block (n <= 22): dp[mask] holds the endpoints of simple
// paths that start at min(mask) and cover exactly mask. Cycles close when an
// endpoint sees the start again.
constexpr int kSubsetDpMax = 22;

struct DpCycleResult {
    int best = 0;
    std::uint32_t best_mask = 0;
    int best_end = -1;
};

DpCycleResult subset_dp_cycles(const SubGraph& s, int target, Budget& budget,
                               std::vector<std::uint32_t>& dp) {
    int n = s.n;
    std::uint32_t lim = 1u << n;
    budget.tick(lim);
    dp.assign(lim, 0);
    DpCycleResult res;
    std::vector<std::uint32_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(s.adj[v]);
    for (std::uint32_t mask = 1; mask < lim; ++mask) {
        int start = std::countr_zero(mask);
        std::uint32_t ends = mask == (1u << start) ? (1u << start) : dp[mask];
        if (!ends) continue;
        int len = std::popcount(mask);
        if (len >= 3) {
            std::uint32_t closers = ends & adj[start];
            if (closers && len > res.best) {
                res.best = len;
                res.best_mask = mask;
                res.best_end = std::countr_zero(closers);
                if (target > 0 && res.best >= target) return res;
            }
        }
        std::uint32_t ge = ~((2u << start) - 1);  // vertices above the start
        std::uint32_t e = ends;
        while (e) {
            int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = adj[v] & ~mask & ge;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return res;
}

std::vector<int> dp_cycle_witness(const SubGraph& s, const std::vector<std::uint32_t>& dp,
                                  std::uint32_t mask, int end) {
    int start = std::countr_zero(mask);
    std::vector<int> rev;
    std::uint32_t m = mask;
    int cur = end;
    while (true) {
        rev.push_back(cur);
        std::uint32_t rest = m & ~(1u << cur);
        if (rest == (1u << start)) break;
        std::uint32_t preds = dp[rest] & static_cast<std::uint32_t>(s.adj[cur]);
        cur = std::countr_zero(preds);
        m = rest;
    }
    rev.push_back(start);
    std::reverse(rev.begin(), rev.end());
    for (int& v : rev) v = s.label[v];
    return rev;
}

// ---------------------------------------------------------------------------
// Branch-and-bound longest cycle for blocks above the DP limit. Cycles are
// enumerated by their minimum vertex; neighbors expand in ascending order.
struct CycleDfs {
    const SubGraph& s;
    Budget& budget;
    int target;  // >0: stop as soon as a cycle of that length exists
    int best = 0;
    std::vector<int> stack, best_cycle;

    CycleDfs(const SubGraph& sg, Budget& b, int tgt) : s(sg), budget(b), target(tgt) {}

    bool dfs(int start, int e, std::uint64_t visited, int len) {
        budget.tick();
        if (len >= 3 && ((s.adj[e] >> start) & 1u) && len > best) {
            best = len;
            best_cycle = stack;
            if (target > 0 && best >= target) return true;
        }
        std::uint64_t ge = ~((2ull << start) - 1);
        std::uint64_t r = reach(s, e, visited & ~(1ull << e)) & (ge | (1ull << start));
        int ub = len + std::popcount(r & ~(1ull << e) & ~(1ull << start));
        int need = target > 0 ? target : best + 1;
        if (ub < need) return false;
        bool closable = false;  // the start must stay adjacent to the explorable region
        std::uint64_t rr = r;
        while (rr && !closable) {
            int v = std::countr_zero(rr);
            rr &= rr - 1;
            closable = (s.adj[start] >> v) & 1u;
        }
        if (!closable) return false;
        std::uint64_t ext = s.adj[e] & ~visited & ge;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            stack.push_back(u);
            if (dfs(start, u, visited | (1ull << u), len + 1)) return true;
            stack.pop_back();
        }
        return false;
    }

    void run() {
        for (int start = 0; start < s.n; ++start) {
            if (s.n - start < std::max(3, best + 1)) break;
            if (target > 0 && s.n - start < target) break;
            stack.assign(1, start);
            if (dfs(start, start, 1ull << start, 1)) return;
        }
    }
};

struct BlockCycleAnswer {
    int length = 0;
    std::vector<int> cycle;  // original labels, nonempty iff length >= 3
};

BlockCycleAnswer block_longest_cycle(const SubGraph& s, int target, Budget& budget) {
    BlockCycleAnswer ans;
    if (s.n < 3) return ans;
    if (s.n <= kSubsetDpMax) {
        std::vector<std::uint32_t> dp;
        DpCycleResult r = subset_dp_cycles(s, target, budget, dp);
        ans.length = r.best;
        if (r.best >= 3) ans.cycle = dp_cycle_witness(s, dp, r.best_mask, r.best_end);
        return ans;
    }
    CycleDfs dfs(s, budget, target);
    dfs.run();
    ans.length = dfs.best;
    if (dfs.best >= 3) {
        ans.cycle.reserve(dfs.best_cycle.size());
        for (int v : dfs.best_cycle) ans.cycle.push_back(s.label[v]);
    }
    return ans;
}

// ---------------------------------------------------------------------------
// Longest path between fixed endpoints inside one block.
struct PathDfs {
    const SubGraph& s;
    Budget& budget;
    int dest;
    int target;        // >0: existence mode, stop at this length
    bool require_all;  // hamiltonian mode: every vertex must still be coverable
    int best = -1;
    std::vector<int> stack, best_path;

    PathDfs(const SubGraph& sg, Budget& b, int dest_, int tgt, bool all)
        : s(sg), budget(b), dest(dest_), target(tgt), require_all(all) {}

    bool dfs(int e, std::uint64_t visited, int len) {
        budget.tick();
        if (e == dest) {
            if (len > best) {
                best = len;
                best_path = stack;
            }
            return target > 0 && best >= target;
        }
        std::uint64_t re = reach(s, e, visited & ~(1ull << e));
        if (!((re >> dest) & 1u)) return false;
        int need = target > 0 ? target : best + 1;
        if (target < 0) {
            // Exact mode: a path vertex must be reachable from both endpoints.
            std::uint64_t rd = reach(s, dest, (visited | (1ull << e)) & ~(1ull << dest));
            re &= rd | (1ull << e);
        }
        int ub = len + std::popcount(re & ~(1ull << e));
        if (ub < need) return false;
        if (require_all) {
            std::uint64_t unvisited = ~visited & all_mask(s.n);
            if (unvisited & ~re) return false;  // someone is already cut off
            std::uint64_t avail_base = unvisited | (1ull << e);
            std::uint64_t m = unvisited;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                int needed = v == dest ? 1 : 2;
                if (std::popcount(s.adj[v] & avail_base) < needed) return false;
            }
        }
        std::uint64_t ext = s.adj[e] & ~visited;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            stack.push_back(u);
            if (dfs(u, visited | (1ull << u), len + 1)) return true;
            stack.pop_back();
            if (target < 0 && best == s.n - 1) break;  // cannot improve further
        }
        return false;
    }

    void run(int from) {
        stack.assign(1, from);
        dfs(from, 1ull << from, 0);
    }
};

PathResult block_longest_path(const SubGraph& s, int a, int b, int target, Budget& budget) {
    PathDfs dfs(s, budget, b, target, false);
    dfs.run(a);
    PathResult res;
    if (dfs.best >= 0) {
        res.found = true;
        res.path.reserve(dfs.best_path.size());
        for (int v : dfs.best_path) res.path.push_back(s.label[v]);
    }
    return res;
}

// Exact-length path search (for cycles of a prescribed length through an edge).
struct ExactLenDfs {
    const SubGraph& s;
    Budget& budget;
    int dest, want;
    std::vector<int> stack;
    std::vector<int> dist_buf;

    ExactLenDfs(const SubGraph& sg, Budget& b, int dest_, int want_)
        : s(sg), budget(b), dest(dest_), want(want_), dist_buf(sg.n) {}

    bool dfs(int e, std::uint64_t visited, int len) {
        budget.tick();
        if (e == dest) return len == want;
        int remaining = want - len;
        reach_dists(s, e, visited & ~(1ull << e), dist_buf.data());
        if (dist_buf[dest] < 0 || dist_buf[dest] > remaining) return false;
        std::uint64_t re = reach(s, e, visited & ~(1ull << e));
        if (std::popcount(re & ~(1ull << e)) < remaining) return false;
        std::uint64_t ext = s.adj[e] & ~visited;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            stack.push_back(u);
            if (dfs(u, visited | (1ull << u), len + 1)) return true;
            stack.pop_back();
        }
        return false;
    }
};

std::vector<std::vector<int>> searchable_blocks(const Graph& g, int min_size) {
    std::vector<std::vector<int>> out;
    for (auto& verts : biconnected_vertex_sets(g))
        if (static_cast<int>(verts.size()) >= min_size) out.push_back(std::move(verts));
    return out;
}

}  // namespace

int circumference(const Graph& g, const SearchLimits& lim) {
    Budget budget(lim);
    int best = 0;
    for (auto& verts : searchable_blocks(g, 3)) {
        if (verts.size() > 64) throw ResourceExhausted("block above 64 vertices");
        SubGraph s = induce(g, verts);
        best = std::max(best, block_longest_cycle(s, -1, budget).length);
    }
    return best;
}

std::optional<std::vector<int>> find_cycle_at_least(const Graph& g, int r,
                                                    const SearchLimits& lim) {
    if (r < 3) throw std::invalid_argument("cycle threshold must be at least 3");
    Budget budget(lim);
    for (auto& verts : searchable_blocks(g, r)) {
        if (verts.size() > 64) throw ResourceExhausted("block above 64 vertices");
        SubGraph s = induce(g, verts);
        BlockCycleAnswer ans = block_longest_cycle(s, r, budget);
        if (ans.length >= r) return ans.cycle;
    }
    return std::nullopt;
}

bool has_cycle_at_least(const Graph& g, int r, const SearchLimits& lim) {
    return find_cycle_at_least(g, r, lim).has_value();
}

// ---------------------------------------------------------------------------

struct LongPathOracle::BlockCache {
    std::unordered_map<std::uint64_t, PathResult> map;
};

LongPathOracle::LongPathOracle(const Graph& g, SearchLimits lim)
    : g_(g), lim_(lim), bd_(block_decomposition(g)), cache_(new BlockCache) {}

LongPathOracle::~LongPathOracle() = default;

PathResult LongPathOracle::longest_path(int u, int v) {
    auto steps = bd_.route(u, v);
    std::vector<const PathResult*> segs;
    segs.reserve(steps.size());
    Budget budget(lim_);
    for (auto& st : steps) {
        std::uint64_t key = (static_cast<std::uint64_t>(st.block) << 40) |
                            (static_cast<std::uint64_t>(st.in) << 20) |
                            static_cast<std::uint64_t>(st.out);
        auto it = cache_->map.find(key);
        if (it == cache_->map.end()) {
            const Block& blk = bd_.blocks[st.block];
            PathResult r;
            if (blk.is_bridge()) {
                r.found = true;
                r.path = {st.in, st.out};
            } else {
                if (blk.vertices.size() > 64) throw ResourceExhausted("block above 64 vertices");
                SubGraph s = induce(g_, blk.vertices);
                int a = -1, b = -1;
                for (int i = 0; i < s.n; ++i) {
                    if (s.label[i] == st.in) a = i;
                    if (s.label[i] == st.out) b = i;
                }
                r = block_longest_path(s, a, b, -1, budget);
            }
            it = cache_->map.emplace(key, std::move(r)).first;
        }
        segs.push_back(&it->second);
    }
    PathResult total;
    total.found = true;
    for (const PathResult* seg : segs) {
        if (!seg->found) return {};  // cannot happen inside one block, defensive
        if (total.path.empty())
            total.path = seg->path;
        else
            total.path.insert(total.path.end(), seg->path.begin() + 1, seg->path.end());
    }
    return total;
}

int LongPathOracle::longest_path_length(int u, int v) {
    PathResult r = longest_path(u, v);
    return r.found ? static_cast<int>(r.path.size()) - 1 : -1;
}

PathResult exists_path_at_least(const Graph& g, int u, int v, int min_edges,
                                const SearchLimits& lim) {
    if (u == v) throw std::invalid_argument("exists_path_at_least: identical endpoints");
    auto comp = component_ids(g);
    if (comp[u] != comp[v]) return {};

    // Work on the component containing both endpoints.
    std::vector<int> verts;
    for (int x = 0; x < g.order(); ++x)
        if (comp[x] == comp[u]) verts.push_back(x);
    Graph sub;
    const Graph* host = &g;
    int lu = u, lv = v;
    if (static_cast<int>(verts.size()) != g.order()) {
        std::vector<int> local(g.order(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (auto [a, b] : g.edges())
            if (local[a] >= 0 && local[b] >= 0) edges.emplace_back(local[a], local[b]);
        sub = Graph::from_edges(static_cast<int>(verts.size()), edges);
        host = &sub;
        lu = local[u];
        lv = local[v];
    }

    LongPathOracle oracle(*host, lim);
    PathResult r = oracle.longest_path(lu, lv);
    if (!r.found || static_cast<int>(r.path.size()) - 1 < min_edges) return {};
    if (host == &sub)
        for (int& x : r.path) x = verts[x];
    return r;
}

bool has_hamiltonian_path(const Graph& g, int u, int v, const SearchLimits& lim) {
    if (u == v) throw std::invalid_argument("hamiltonian path: identical endpoints");
    if (!is_connected(g)) return false;
    if (g.order() > 64) throw ResourceExhausted("graph above 64 vertices");
    std::vector<int> verts(g.order());
    for (int i = 0; i < g.order(); ++i) verts[i] = i;
    SubGraph s = induce(g, verts);
    Budget budget(lim);
    PathDfs dfs(s, budget, v, g.order() - 1, true);
    dfs.run(u);
    return dfs.best == g.order() - 1;
}

bool has_hamiltonian_cycle(const Graph& g, const SearchLimits& lim) {
    int n = g.order();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) return false;
    if (!is_connected(g)) return false;
    if (n > 64) throw ResourceExhausted("graph above 64 vertices");
    // A hamiltonian cycle through vertex 0 is a hamiltonian 0->x path for a
    // neighbor x of 0; force the first step to the smallest neighbor of 0 on
    // each side by trying all closing neighbors.
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    SubGraph s = induce(g, verts);
    Budget budget(lim);
    std::uint64_t cands = s.adj[0];
    while (cands) {
        int x = std::countr_zero(cands);
        cands &= cands - 1;
        PathDfs dfs(s, budget, x, n - 1, true);
        dfs.run(0);
        if (dfs.best == n - 1) return true;
    }
    return false;
}

bool edge_on_cycle_of_length(const Graph& g, int u, int v, int len, const SearchLimits& lim) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge_on_cycle_of_length: not an edge");
    if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (len > g.order()) return false;
    // The cycle lives inside the block containing uv.
    BlockDecomposition bd = block_decomposition(g);
    const Block* blk = nullptr;
    Edge key{std::min(u, v), std::max(u, v)};
    for (auto& b : bd.blocks)
        if (std::binary_search(b.edges.begin(), b.edges.end(), key)) {
            blk = &b;
            break;
        }
    if (!blk || blk->is_bridge()) return false;
    if (static_cast<int>(blk->vertices.size()) < len) return false;
    if (blk->vertices.size() > 64) throw ResourceExhausted("block above 64 vertices");
    SubGraph s = induce(g, blk->vertices);
    int a = -1, b = -1;
    for (int i = 0; i < s.n; ++i) {
        if (s.label[i] == u) a = i;
        if (s.label[i] == v) b = i;
    }
    Budget budget(lim);
    ExactLenDfs dfs(s, budget, b, len - 1);
    dfs.stack.assign(1, a);
    return dfs.dfs(a, 1ull << a, 0);
}

}  // namespace cyclesat
