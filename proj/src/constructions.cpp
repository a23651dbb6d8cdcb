#include "cyclesat/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclesat/structure.hpp"

namespace cyclesat {

namespace {
void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}
}  // namespace

Graph complete_graph(int n) {
    require(n >= 0, "complete_graph: negative order");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.take();
}

Graph d_graph(int a, int b) {
    require(a >= 0 && b >= 0, "d_graph: parameters must be nonnegative");
    GraphBuilder g(a + b + 3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    for (int i = 0; i < a; ++i) {
        g.add_edge(3 + i, 0);
        g.add_edge(3 + i, 1);
    }
    for (int i = 0; i < b; ++i) {
        g.add_edge(a + 3 + i, 0);
        g.add_edge(a + 3 + i, 2);
    }
    return g.take();
}

Graph h_graph(int n, int k, int r) {
    require(r >= 1, "h_graph: r must be positive");
    require(k >= 2 * r, "h_graph: requires k >= 2r");
    require(n >= k, "h_graph: requires n >= k");
    GraphBuilder g(n);
    int clique = k - r;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v) g.add_edge(u, v);
    for (int v = clique; v < n; ++v)
        for (int c = 0; c < r; ++c) g.add_edge(v, c);
    return g.take();
}

namespace {
int cactus_block_order(const CactusBlock& b) {
    switch (b.family) {
        case CactusBlock::Family::k3: return 3;
        case CactusBlock::Family::k4: return 4;
        case CactusBlock::Family::k5: return 5;
        case CactusBlock::Family::d:
            require(b.p1 >= 2 && b.p2 >= 2, "cactus: D blocks need a,b >= 2");
            return b.p1 + b.p2 + 3;
        case CactusBlock::Family::h:
            require(b.p1 >= 6, "cactus: H blocks need t >= 6");
            return b.p1;
    }
    throw std::invalid_argument("cactus: unknown block family");
}

Graph cactus_block_graph(const CactusBlock& b) {
    cactus_block_order(b);  // validates the family parameters
    switch (b.family) {
        case CactusBlock::Family::k3: return complete_graph(3);
        case CactusBlock::Family::k4: return complete_graph(4);
        case CactusBlock::Family::k5: return complete_graph(5);
        case CactusBlock::Family::d: return d_graph(b.p1, b.p2);
        case CactusBlock::Family::h: return h_graph(b.p1, 6, 2);
    }
    throw std::invalid_argument("cactus: unknown block family");
}
}  // namespace

long long cactus_order_formula(std::span<const CactusBlock> blocks) {
    long long total = 1;
    for (const auto& b : blocks) total += cactus_block_order(b) - 1;
    return total;
}

Graph cactus(std::span<const CactusBlock> blocks, std::span<const int> at,
             std::span<const int> via) {
    require(!blocks.empty(), "cactus: needs at least one block");
    require(at.size() == blocks.size() && via.size() == blocks.size(),
            "cactus: attachment plan size mismatch");
    Graph g = cactus_block_graph(blocks[0]);
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        Graph blk = cactus_block_graph(blocks[i]);
        int s = blk.order();
        require(via[i] >= 0 && via[i] < s, "cactus: local attachment vertex out of range");
        require(at[i] >= 0 && at[i] < g.order(),
                "cactus: attachment plan is not a tree over the prefix");
        std::vector<int> map(s);
        int next = g.order();
        for (int j = 0; j < s; ++j) map[j] = j == via[i] ? at[i] : next++;
        GraphBuilder nb(next);
        for (auto [x, y] : g.edges()) nb.add_edge(x, y);
        for (auto [x, y] : blk.edges()) nb.add_edge(map[x], map[y]);
        g = nb.take();
    }
    return g;
}

Graph cactus(std::span<const CactusBlock> blocks, std::span<const int> at) {
    std::vector<int> via(blocks.size(), 0);
    return cactus(blocks, at, via);
}

Graph m6(int n) {
    require(n >= 10, "m6: order must be at least 10");
    if (n % 2 == 0) return m6(n + 1).without_vertex(n);
    int a = (n - 7) / 2;
    Graph core = d_graph(a, 2);
    std::vector<int> rim;
    for (int v = 3; v < core.order(); ++v) rim.push_back(v);
    return attach(core, rim, {});
}

Graph isaacs_snark(int k) {
    require(k >= 3 && k % 2 == 1, "isaacs_snark: k must be odd and at least 3");
    int n = 4 * k;
    GraphBuilder g(n);
    for (int j = 0; j < k; ++j) {
        int base = 4 * j;
        g.add_edge(base, base + 1);
        g.add_edge(base, base + 2);
        g.add_edge(base, base + 3);
        g.add_edge(base + 1, (base + 7) % n);
        g.add_edge(base + 2, (base + 6) % n);
        g.add_edge(base + 3, (base + 5) % n);
    }
    return g.take();
}

Graph expand_vertex(const Graph& g, int v) {
    require(v >= 0 && v < g.order(), "expand_vertex: vertex out of range");
    require(g.degree(v) == 3, "expand_vertex: vertex degree must be 3");
    auto nbrs = g.neighbors(v);  // ascending: x, y, z
    int n = g.order();
    GraphBuilder nb(n + 2);
    for (auto [x, y] : g.edges())
        if (x != v && y != v) nb.add_edge(x, y);
    nb.add_edge(v, n);
    nb.add_edge(n, n + 1);
    nb.add_edge(n + 1, v);
    nb.add_edge(v, nbrs[0]);
    nb.add_edge(n, nbrs[1]);
    nb.add_edge(n + 1, nbrs[2]);
    return nb.take();
}

Graph expand_edge(const Graph& g, int u, int v) {
    require(u >= 0 && u < g.order() && v >= 0 && v < g.order(), "expand_edge: vertex out of range");
    require(g.has_edge(u, v), "expand_edge: uv must be an edge");
    require(g.degree(u) == 3 && g.degree(v) == 3, "expand_edge: both endpoints must have degree 3");
    std::vector<int> nu, nv;
    for (int x : g.neighbors(u))
        if (x != v) nu.push_back(x);
    for (int x : g.neighbors(v))
        if (x != u) nv.push_back(x);
    int n = g.order();
    int x1 = u, x2 = v, y1 = n, y2 = n + 1, z = n + 2;
    GraphBuilder nb(n + 3);
    for (auto [a, b] : g.edges())
        if (a != u && a != v && b != u && b != v) nb.add_edge(a, b);
    nb.add_edge(x1, y1);
    nb.add_edge(x2, y2);
    nb.add_edge(z, x1);
    nb.add_edge(z, x2);
    nb.add_edge(z, y1);
    nb.add_edge(z, y2);
    nb.add_edge(x1, nu[0]);
    nb.add_edge(y1, nu[1]);
    nb.add_edge(x2, nv[0]);
    nb.add_edge(y2, nv[1]);
    return nb.take();
}

Graph attach(const Graph& g, std::span<const int> pendant_at, std::span<const int> triangle_at) {
    std::vector<char> in_u(g.order(), 0), in_w(g.order(), 0);
    for (int v : pendant_at) {
        require(v >= 0 && v < g.order(), "attach: pendant host out of range");
        require(!in_u[v], "attach: duplicate pendant host");
        in_u[v] = 1;
    }
    for (int v : triangle_at) {
        require(v >= 0 && v < g.order(), "attach: triangle host out of range");
        require(!in_w[v], "attach: duplicate triangle host");
        require(!in_u[v], "attach: pendant and triangle hosts must be disjoint");
        in_w[v] = 1;
    }
    int n = g.order();
    GraphBuilder nb(n + static_cast<int>(pendant_at.size()) +
                    2 * static_cast<int>(triangle_at.size()));
    for (auto [x, y] : g.edges()) nb.add_edge(x, y);
    int next = n;
    for (int h = 0; h < n; ++h) {
        if (in_u[h]) nb.add_edge(h, next++);
        if (in_w[h]) {
            nb.add_edge(h, next);
            nb.add_edge(h, next + 1);
            nb.add_edge(next, next + 1);
            next += 2;
        }
    }
    return nb.take();
}

namespace {
int lowest_leaf_of(const Graph& g, int support) {
    int leaf = -1;
    g.for_neighbors(support, [&](int x) {
        if (leaf < 0 && g.degree(x) == 1) leaf = x;
    });
    return leaf;
}
}  // namespace

Graph chain(std::span<const Graph> parts, std::span<const Edge> supports) {
    require(!parts.empty(), "chain: needs at least one part");
    require(supports.size() + 1 == parts.size(), "chain: need one join per adjacent pair");
    if (parts.size() == 1) return parts[0];

    std::vector<int> offset(parts.size(), 0);
    for (std::size_t i = 1; i < parts.size(); ++i)
        offset[i] = offset[i - 1] + parts[i - 1].order();
    int total = offset.back() + parts.back().order();

    GraphBuilder nb(total);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto [x, y] : parts[i].edges()) nb.add_edge(x + offset[i], y + offset[i]);

    std::vector<int> doomed;
    for (std::size_t j = 0; j < supports.size(); ++j) {
        auto [u, v] = supports[j];
        require(u >= 0 && u < parts[j].order(), "chain: support out of range");
        require(v >= 0 && v < parts[j + 1].order(), "chain: support out of range");
        if (j > 0)
            require(supports[j - 1].second != u,
                    "chain: outgoing support collides with incoming support");
        int leaf_u = lowest_leaf_of(parts[j], u);
        int leaf_v = lowest_leaf_of(parts[j + 1], v);
        require(leaf_u >= 0, "chain: left endpoint is not a support vertex");
        require(leaf_v >= 0, "chain: right endpoint is not a support vertex");
        nb.add_edge(u + offset[j], v + offset[j + 1]);
        doomed.push_back(leaf_u + offset[j]);
        doomed.push_back(leaf_v + offset[j + 1]);
    }
    return nb.take().without_vertices(doomed);
}

Graph m_rn(int r, int n, const Graph& base) {
    require(base.order() == r, "m_rn: base order must equal r");
    require(n >= r, "m_rn: n must be at least r");
    require(is_good_graph(base), "m_rn: base fails the good-graph predicate");

    if (n <= 2 * r) {
        std::vector<int> hosts(n - r);
        for (int i = 0; i < n - r; ++i) hosts[i] = i;
        return attach(base, hosts, {});
    }

    for (int k = 2; k <= n; ++k) {
        long long lo2 = 2ll * (k - 1) * r - 2 * (k - 2);
        bool case2 = lo2 < n && 2ll * n < static_cast<long long>(4 * k - 3) * r;
        bool case3 = static_cast<long long>(4 * k - 3) * r <= 2ll * n &&
                     n <= 2ll * k * r - 2 * (k - 1);
        if (!case2 && !case3) continue;

        int nparts = case2 ? k - 1 : k;
        auto min_hosts = [&](int i) {  // 1-indexed part
            int need = 0;
            if (i >= 2) ++need;           // incoming support
            if (i <= nparts - 1) ++need;  // outgoing support
            return std::max(1, need);
        };

        std::vector<int> host_count(nparts + 1, 0);
        if (case2) {
            long long triangles = n - lo2;  // sum of triangle-host set sizes
            std::vector<int> tri(nparts + 1, 0);
            long long remaining = triangles;
            for (int i = 1; i <= nparts; ++i) {
                long long cap = r - min_hosts(i);
                long long take = std::min(remaining, cap);
                tri[i] = static_cast<int>(take);
                remaining -= take;
            }
            require(remaining == 0, "m_rn: cannot place triangle hosts");
            std::vector<Graph> parts;
            for (int i = 1; i <= nparts; ++i) {
                int u_count = r - tri[i];
                std::vector<int> pend(u_count), tris(tri[i]);
                for (int j = 0; j < u_count; ++j) pend[j] = j;
                for (int j = 0; j < tri[i]; ++j) tris[j] = u_count + j;
                parts.push_back(attach(base, pend, tris));
            }
            std::vector<Edge> joins;
            for (int j = 1; j <= nparts - 1; ++j) joins.push_back({j == 1 ? 0 : 1, 0});
            return chain(parts, joins);
        }

        long long pendants = static_cast<long long>(n) - static_cast<long long>(k) * r +
                             2 * (k - 1);
        long long remaining = pendants;
        for (int i = 1; i <= nparts; ++i) {
            host_count[i] = min_hosts(i);
            remaining -= host_count[i];
        }
        require(remaining >= 0, "m_rn: not enough pendant hosts for the joins");
        for (int i = 1; i <= nparts && remaining > 0; ++i) {
            long long add = std::min<long long>(remaining, r - host_count[i]);
            host_count[i] += static_cast<int>(add);
            remaining -= add;
        }
        require(remaining == 0, "m_rn: cannot place pendant hosts");
        std::vector<Graph> parts;
        for (int i = 1; i <= nparts; ++i) {
            std::vector<int> pend(host_count[i]);
            for (int j = 0; j < host_count[i]; ++j) pend[j] = j;
            parts.push_back(attach(base, pend, {}));
        }
        std::vector<Edge> joins;
        for (int j = 1; j <= nparts - 1; ++j) joins.push_back({j == 1 ? 0 : 1, 0});
        return chain(parts, joins);
    }
    throw std::invalid_argument("m_rn: no construction case covers this n");
}

std::string ConstructionSpec::family_name() const {
    switch (kind) {
        case Kind::kn: return "Kn";
        case Kind::d: return "D";
        case Kind::h: return "H";
        case Kind::cactus: return "cactus";
        case Kind::m6: return "M6";
        case Kind::snark: return "snark";
        case Kind::expand_vertex: return "expand-vertex";
        case Kind::expand_edge: return "expand-edge";
        case Kind::attach: return "attach";
        case Kind::chain: return "chain";
        case Kind::mrn: return "Mrn";
        case Kind::good_base: return "good-base";
    }
    return "?";
}

Graph build(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionSpec::Kind::kn:
            return complete_graph(spec.n);
        case ConstructionSpec::Kind::d:
            return d_graph(spec.a, spec.b);
        case ConstructionSpec::Kind::h:
            return h_graph(spec.n, spec.k, spec.r);
        case ConstructionSpec::Kind::cactus:
            if (spec.via.empty()) return cactus(spec.blocks, spec.at);
            return cactus(spec.blocks, spec.at, spec.via);
        case ConstructionSpec::Kind::m6:
            return m6(spec.n);
        case ConstructionSpec::Kind::snark:
            return isaacs_snark(spec.k);
        case ConstructionSpec::Kind::expand_vertex:
            require(spec.children.size() == 1, "expand-vertex: needs one inner graph");
            return expand_vertex(build(spec.children[0]), spec.v);
        case ConstructionSpec::Kind::expand_edge:
            require(spec.children.size() == 1, "expand-edge: needs one inner graph");
            return expand_edge(build(spec.children[0]), spec.u, spec.v);
        case ConstructionSpec::Kind::attach:
            require(spec.children.size() == 1, "attach: needs one inner graph");
            return attach(build(spec.children[0]), spec.set_u, spec.set_w);
        case ConstructionSpec::Kind::chain: {
            require(!spec.children.empty(), "chain: needs parts");
            std::vector<Graph> parts;
            for (const auto& c : spec.children) parts.push_back(build(c));
            return chain(parts, spec.joins);
        }
        case ConstructionSpec::Kind::mrn: {
            require(spec.children.size() == 1, "mrn: needs a base graph");
            return m_rn(spec.r, spec.n, build(spec.children[0]));
        }
        case ConstructionSpec::Kind::good_base:
            return build(good_base(spec.r));
    }
    throw std::invalid_argument("unknown construction kind");
}

ConstructionSpec good_base(int r) {
    if (r < 56)
        throw std::invalid_argument(
            "good_base: table applies from 56 up; supply a verified small base instead");
    int p = r / 8;
    int rem = r % 8;
    int k = 2 * p + 1;

    auto snark = [](int kk) {
        ConstructionSpec s;
        s.kind = ConstructionSpec::Kind::snark;
        s.k = kk;
        return s;
    };
    auto vexp = [](ConstructionSpec inner, int v) {
        ConstructionSpec s;
        s.kind = ConstructionSpec::Kind::expand_vertex;
        s.v = v;
        s.children.push_back(std::move(inner));
        return s;
    };
    auto eexp = [](ConstructionSpec inner, int u, int v) {
        ConstructionSpec s;
        s.kind = ConstructionSpec::Kind::expand_edge;
        s.u = u;
        s.v = v;
        s.children.push_back(std::move(inner));
        return s;
    };

    switch (rem) {
        case 0: return vexp(vexp(snark(k - 2), 2), 14);
        case 1: return eexp(vexp(snark(k - 2), 14), 0, 2);
        case 2: return vexp(vexp(vexp(snark(k - 2), 2), 14), 26);
        case 3: return eexp(vexp(vexp(snark(k - 2), 14), 26), 0, 2);
        case 4: return snark(k);
        case 5: return eexp(vexp(vexp(vexp(snark(k - 2), 14), 26), 38), 0, 2);
        case 6: return vexp(snark(k), 2);
        case 7: return eexp(snark(k), 0, 2);
    }
    throw std::logic_error("good_base: unreachable");
}

}  // namespace cyclesat
