#include "cyclesat/structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "cyclesat/blocks.hpp"

namespace cyclesat {

namespace {

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> tris;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(v)) {
                if (w <= v) continue;
                if (g.has_edge(u, w)) tris.push_back({u, v, w});
            }
        }
    return tris;
}

std::string vertex_list(const std::vector<int>& vs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << "}";
    return os.str();
}

}  // namespace

bool contains_barbell(const Graph& g) {
    auto tris = all_triangles(g);
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            const auto& a = tris[i];
            const auto& b = tris[j];
            bool disjoint = true;
            for (int x : a)
                for (int y : b)
                    if (x == y) disjoint = false;
            if (!disjoint) continue;
            for (int x : a)
                for (int y : b)
                    if (g.has_edge(x, y)) return true;
        }
    return false;
}

bool is_almost_3_regular(const Graph& g) {
    int u0 = -1;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 3) continue;
        if (d == 4 && u0 < 0) {
            u0 = v;
            continue;
        }
        return false;
    }
    if (u0 < 0) return false;
    auto nb = g.neighbors(u0);
    // N(u0) must induce exactly a perfect matching on its four vertices.
    std::vector<Edge> inside;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) inside.push_back({nb[i], nb[j]});
    if (inside.size() != 2) return false;
    auto [a1, a2] = inside[0];
    auto [b1, b2] = inside[1];
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
    // Each matched pair needs distinct third neighbors outside {u0} u N(u0).
    auto outside_neighbor = [&](int v) {
        int out = -1;
        for (int x : g.neighbors(v)) {
            if (x == u0) continue;
            if (std::find(nb.begin(), nb.end(), x) != nb.end()) continue;
            out = x;
        }
        return out;
    };
    int oa1 = outside_neighbor(a1), oa2 = outside_neighbor(a2);
    int ob1 = outside_neighbor(b1), ob2 = outside_neighbor(b2);
    if (oa1 < 0 || oa2 < 0 || ob1 < 0 || ob2 < 0) return false;
    return oa1 != oa2 && ob1 != ob2;
}

bool is_good_graph(const Graph& g) {
    bool cubic = g.order() > 0;
    for (int v = 0; v < g.order() && cubic; ++v) cubic = g.degree(v) == 3;
    if (!cubic && !is_almost_3_regular(g)) return false;
    return !contains_barbell(g);
}

bool c6_characterization(const Graph& g) {
    if (g.order() == 0) return false;
    if (!is_connected(g)) return false;
    // Complete graphs below the cycle threshold have no non-edge to add.
    if (g.order() <= 5 && g.size() == g.order() * (g.order() - 1) / 2) return true;

    BlockDecomposition bd = block_decomposition(g);

    // (i) bridge blocks form a matching
    {
        std::vector<char> used(g.order(), 0);
        for (int b : bd.bridge_blocks)
            for (int v : bd.blocks[b].vertices) {
                if (used[v]) return false;
                used[v] = 1;
            }
    }

    // (ii) no two triangle blocks share a cut vertex
    {
        std::vector<int> k3_count(g.order(), 0);
        for (const auto& blk : bd.blocks)
            if (blk.kind == BlockKind::k3)
                for (int v : blk.vertices)
                    if (++k3_count[v] > 1) return false;
    }

    // (iii) bridges avoid D/H centers and all K3/K4 vertices
    {
        std::vector<char> banned(g.order(), 0);
        for (const auto& blk : bd.blocks) {
            if (blk.kind == BlockKind::k3 || blk.kind == BlockKind::k4)
                for (int v : blk.vertices) banned[v] = 1;
            if (blk.kind == BlockKind::d_family || blk.kind == BlockKind::h_family)
                for (int v : blk.centers) banned[v] = 1;
        }
        for (int b : bd.bridge_blocks)
            for (int v : bd.blocks[b].vertices)
                if (banned[v]) return false;
    }

    // (iv) components after deleting bridge edges: K1 or a cactus over the
    // admissible block families, with c+d+f >= 1 whenever a+b <= 1.
    {
        GraphBuilder nb(g.order());
        std::vector<char> is_bridge_block(bd.blocks.size(), 0);
        for (int b : bd.bridge_blocks) is_bridge_block[b] = 1;
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
            if (is_bridge_block[b]) continue;
            for (auto [x, y] : bd.blocks[b].edges) nb.add_edge(x, y);
        }
        Graph stripped = nb.take();
        auto comp = component_ids(stripped);
        int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
        std::vector<int> ab(ncomp, 0), cdf(ncomp, 0), nontrivial(ncomp, 0), bad(ncomp, 0);
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
            if (is_bridge_block[b]) continue;
            int c = comp[bd.blocks[b].vertices[0]];
            nontrivial[c] = 1;
            switch (bd.blocks[b].kind) {
                case BlockKind::k3:
                case BlockKind::k4: ab[c]++; break;
                case BlockKind::k5:
                case BlockKind::d_family:
                case BlockKind::h_family: cdf[c]++; break;
                default: bad[c] = 1; break;
            }
        }
        for (int c = 0; c < ncomp; ++c) {
            if (!nontrivial[c]) continue;  // isolated vertex, fine
            if (bad[c]) return false;
            if (ab[c] <= 1 && cdf[c] == 0) return false;
        }
    }
    return true;
}

StructurePartition structure_partition(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("structure_partition: order below 3");
    if (!is_connected(g)) throw std::invalid_argument("structure_partition: disconnected input");

    StructurePartition p;
    int n = g.order();
    std::vector<int> cls(n, -1);  // 0..6 = x1,x2,x2p,x3,xge4,y,z
    std::vector<char> support(n, 0);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) {
            cls[v] = 0;
            p.x1.push_back(v);
        }
    for (int v : p.x1)
        g.for_neighbors(v, [&](int u) { support[u] = 1; });
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        int d = g.degree(v);
        if (d == 2) {
            bool deg2_nbr = false;
            g.for_neighbors(v, [&](int u) { deg2_nbr = deg2_nbr || g.degree(u) == 2; });
            cls[v] = deg2_nbr ? 2 : 1;
            (deg2_nbr ? p.x2p : p.x2).push_back(v);
        } else if (support[v] && d == 3) {
            cls[v] = 3;
            p.x3.push_back(v);
        } else if (support[v] && d >= 4) {
            cls[v] = 4;
            p.xge4.push_back(v);
        }
    }
    auto in_core = [&](int v) { return cls[v] == 1 || cls[v] == 2 || cls[v] == 3; };
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        bool nbr_core = false;
        g.for_neighbors(v, [&](int u) { nbr_core = nbr_core || in_core(u); });
        if (nbr_core) {
            cls[v] = 5;
            p.y.push_back(v);
        }
    }
    for (int v = 0; v < n; ++v)
        if (cls[v] < 0) {
            cls[v] = 6;
            p.z.push_back(v);
        }
    for (int v : p.y) {
        bool iso = true;
        g.for_neighbors(v, [&](int u) { iso = iso && cls[u] != 5; });
        (iso ? p.y1 : p.y2).push_back(v);
    }
    return p;
}

std::map<std::string, int> StructurePartition::counts() const {
    return {{"x1", static_cast<int>(x1.size())},  {"x2", static_cast<int>(x2.size())},
            {"x2p", static_cast<int>(x2p.size())}, {"x3", static_cast<int>(x3.size())},
            {"x4", static_cast<int>(xge4.size())}, {"y", static_cast<int>(y.size())},
            {"y1", static_cast<int>(y1.size())},   {"y2", static_cast<int>(y2.size())},
            {"z", static_cast<int>(z.size())}};
}

bool PropertyReport::all_hold() const {
    for (const auto& [name, c] : items)
        if (!c.holds) return false;
    return true;
}

namespace {

Clause empty_graph_clause(const Graph& g, const std::vector<int>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (g.has_edge(a[i], a[j]))
                return {false, true,
                        "edge " + std::to_string(a[i]) + "-" + std::to_string(a[j])};
    return {};
}

Clause empty_bipartite_clause(const Graph& g, const std::vector<int>& a,
                              const std::vector<int>& b) {
    for (int x : a)
        for (int y : b)
            if (g.has_edge(x, y))
                return {false, true, "edge " + std::to_string(x) + "-" + std::to_string(y)};
    return {};
}

std::vector<int> concat(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    std::sort(out.begin(), out.end());
    return out;
}

void require_saturated(const SaturationCertificate& cert) {
    if (!cert.saturated())
        throw std::invalid_argument("structure checks require a saturated input graph");
}

}  // namespace

PropertyReport check_structure_properties(const Graph& g, int r,
                                          const SaturationCertificate& cert) {
    if (r < 6) throw std::invalid_argument("structure properties defined for r >= 6");
    require_saturated(cert);
    StructurePartition p = structure_partition(g);
    PropertyReport rep;

    // (i) the listed induced/bipartite graphs are empty
    {
        Clause c = empty_graph_clause(g, p.x1);
        if (c.holds) c = empty_bipartite_clause(g, p.x1, concat({&p.x2, &p.x2p, &p.y, &p.z}));
        if (c.holds) c = empty_graph_clause(g, concat({&p.x2, &p.x3}));
        if (c.holds) c = empty_bipartite_clause(g, concat({&p.x2, &p.x3}), p.x2p);
        if (c.holds)
            c = empty_bipartite_clause(g, concat({&p.x2p, &p.x2, &p.x3}),
                                       concat({&p.xge4, &p.z}));
        rep.items["i"] = c;
    }

    // (ii) G[X2'] and G[X1, X3 u X>=4] are perfect matchings
    {
        Clause c;
        for (int v : p.x2p) {
            int deg_inside = 0;
            for (int u : p.x2p) deg_inside += g.has_edge(v, u) ? 1 : 0;
            if (deg_inside != 1) {
                c = {false, true, "vertex " + std::to_string(v) + " has " +
                                      std::to_string(deg_inside) + " partners in X2'"};
                break;
            }
        }
        if (c.holds) {
            auto supports = concat({&p.x3, &p.xge4});
            for (int v : p.x1) {
                int deg = 0;
                for (int u : supports) deg += g.has_edge(v, u) ? 1 : 0;
                if (deg != 1) c = {false, true, "leaf " + std::to_string(v) + " unmatched"};
            }
            for (int u : supports) {
                int deg = 0;
                for (int v : p.x1) deg += g.has_edge(v, u) ? 1 : 0;
                if (deg != 1)
                    c = {false, true, "support " + std::to_string(u) + " has " +
                                          std::to_string(deg) + " leaves"};
            }
        }
        rep.items["ii"] = c;
    }

    // (iii) every X2' edge has a common neighbor in Y
    {
        Clause c;
        c.applicable = !p.x2p.empty();
        for (int v : p.x2p)
            for (int u : p.x2p) {
                if (u <= v || !g.has_edge(v, u)) continue;
                bool found = false;
                for (int w : p.y) found = found || (g.has_edge(w, u) && g.has_edge(w, v));
                if (!found)
                    c = {false, true,
                         "pair " + std::to_string(v) + "-" + std::to_string(u) +
                             " lacks a common Y-neighbor"};
            }
        rep.items["iii"] = c;
    }

    // (iv) E[Y, Z u X>=4] nonempty when both sides are
    {
        Clause c;
        auto zx4 = concat({&p.z, &p.xge4});
        if (p.y.empty() || zx4.empty()) {
            c.applicable = false;
        } else {
            bool found = false;
            for (int y : p.y)
                for (int w : zx4) found = found || g.has_edge(y, w);
            if (!found) c = {false, true, "no edge between Y and Z u X>=4"};
        }
        rep.items["iv"] = c;
    }

    // (v) the two Y-neighbors of each X2 u X3 vertex are adjacent
    {
        Clause c;
        auto x23 = concat({&p.x2, &p.x3});
        c.applicable = !x23.empty();
        for (int v : x23) {
            std::vector<int> ny;
            for (int w : p.y)
                if (g.has_edge(v, w)) ny.push_back(w);
            if (ny.size() != 2) {
                c = {false, true, "vertex " + std::to_string(v) + " has " +
                                      std::to_string(ny.size()) + " Y-neighbors"};
                break;
            }
            if (!g.has_edge(ny[0], ny[1])) {
                c = {false, true, "Y-neighbors " + vertex_list(ny) + " of " +
                                      std::to_string(v) + " non-adjacent"};
                break;
            }
        }
        rep.items["v"] = c;
    }

    // (vi) in H = G[Y u Z u X>=4]: min degree over Y at least 2, average
    // degree over Y2 at least 5/2 (exact arithmetic).
    auto hverts = concat({&p.y, &p.z, &p.xge4});
    auto h_degree = [&](int v) {
        int d = 0;
        for (int u : hverts) d += g.has_edge(v, u) ? 1 : 0;
        return d;
    };
    {
        Clause c;
        c.applicable = !p.y.empty();
        for (int v : p.y)
            if (h_degree(v) < 2) {
                c = {false, true, "vertex " + std::to_string(v) + " has H-degree " +
                                      std::to_string(h_degree(v))};
                break;
            }
        if (c.holds && !p.y2.empty()) {
            long long sum = 0;
            for (int v : p.y2) sum += h_degree(v);
            if (2 * sum < 5 * static_cast<long long>(p.y2.size()))
                c = {false, true,
                     "average H-degree over Y2 = " + std::to_string(sum) + "/" +
                         std::to_string(p.y2.size()) + " < 5/2"};
        } else if (c.holds && p.y2.empty()) {
            c.detail = "Y2 empty; average-degree clause vacuous";
        }
        rep.items["vi"] = c;
    }

    // Proof-level degree claims over the same H.
    {
        Clause c1, c2, c3;
        for (int v : p.y2) {
            int dv = h_degree(v);
            std::vector<int> nh;
            for (int u : hverts)
                if (g.has_edge(v, u)) nh.push_back(u);
            if (dv == 2 && !g.has_edge(nh[0], nh[1]))
                c1 = {false, true, "2-vertex " + std::to_string(v) + " has non-adjacent H-neighbors"};
            if (dv == 2)
                for (int u : p.y2)
                    if (u != v && g.has_edge(u, v) && h_degree(u) == 2)
                        c2 = {false, true, "adjacent 2-vertices " + std::to_string(v) + "," +
                                               std::to_string(u)};
            if (dv >= 3) {
                int low = 0;
                for (int u : p.y2)
                    if (g.has_edge(u, v) && h_degree(u) == 2) ++low;
                if (low > dv - 1)
                    c3 = {false, true, "vertex " + std::to_string(v) + " has " +
                                           std::to_string(low) + " degree-2 Y2 neighbors"};
            }
        }
        bool any2 = false, any3 = false;
        for (int v : p.y2) {
            any2 = any2 || h_degree(v) == 2;
            any3 = any3 || h_degree(v) >= 3;
        }
        c1.applicable = c2.applicable = any2;
        c3.applicable = any3;
        rep.items["claim1"] = c1;
        rep.items["claim2"] = c2;
        rep.items["claim3"] = c3;
    }
    return rep;
}

PropertyReport check_structure_properties(const Graph& g, int r) {
    return check_structure_properties(g, r, check_saturation(g, r));
}

PropertyReport check_counting_inequalities(const Graph& g, int r,
                                            const SaturationCertificate& cert) {
    if (r < 6) throw std::invalid_argument("counting inequalities defined for r >= 6");
    require_saturated(cert);
    StructurePartition p = structure_partition(g);
    PropertyReport rep;
    long long n = g.order(), e = g.size();
    long long x1 = p.x1.size(), x2 = p.x2.size(), x2p = p.x2p.size(), x3 = p.x3.size(),
              x4 = p.xge4.size(), y = p.y.size(), y1 = p.y1.size(), z = p.z.size();

    // (a) x1 = x3 + x4 and n = x2 + x2' + 2x3 + 2x4 + y + z
    {
        Clause c;
        if (x1 != x3 + x4)
            c = {false, true, "x1=" + std::to_string(x1) + " vs x3+x4=" + std::to_string(x3 + x4)};
        else if (n != x2 + x2p + 2 * x3 + 2 * x4 + y + z)
            c = {false, true, "vertex count identity fails"};
        rep.items["a"] = c;
    }

    // (b) 2*y1 <= x2' and 2*y <= 4*x2 + 4*x3 + x2'
    {
        Clause c;
        if (2 * y1 > x2p)
            c = {false, true, "y1=" + std::to_string(y1) + " > x2'/2"};
        else if (2 * y > 4 * x2 + 4 * x3 + x2p)
            c = {false, true, "y=" + std::to_string(y) + " > 2x2+2x3+x2'/2"};
        rep.items["b"] = c;
    }

    // (c) branch on "x2+x3 = 0 and the Y u Z u X>=4 core is complete"
    {
        Clause c;
        auto core = concat({&p.y, &p.z, &p.xge4});
        bool complete = true;
        for (std::size_t i = 0; i < core.size() && complete; ++i)
            for (std::size_t j = i + 1; j < core.size() && complete; ++j)
                complete = g.has_edge(core[i], core[j]);
        if (x2 + x3 == 0 && complete) {
            c.detail = "branch: complete core";
            if (z + x4 + y != r - 1)
                c = {false, true,
                     "complete-core branch: z+x4+y=" + std::to_string(z + x4 + y) +
                         " != r-1=" + std::to_string(r - 1)};
        } else {
            c.detail = "branch: general";
            if (x4 + x3 + x2p > n - r)
                c = {false, true, "x4+x3+x2'=" + std::to_string(x4 + x3 + x2p) + " > n-r=" +
                                      std::to_string(n - r)};
            else if (2 * (3 * x2 + 2 * x3 + z) - x2p < 2 * (2 * r - n))
                c = {false, true, "3x2+2x3+z-x2'/2 < 2r-n"};
        }
        rep.items["c"] = c;
    }

    // e(G) >= n + r/2, meaningful for n/2 <= r <= n
    {
        Clause c;
        c.applicable = (r <= n && 2 * r >= n);
        if (c.applicable && 2 * e < 2 * n + r)
            c = {false, true,
                 "e=" + std::to_string(e) + " < n+r/2 = " + std::to_string(n) + "+" +
                     std::to_string(r) + "/2"};
        rep.items["edge_bound"] = c;
    }
    return rep;
}

PropertyReport check_counting_inequalities(const Graph& g, int r) {
    return check_counting_inequalities(g, r, check_saturation(g, r));
}

}  // namespace cyclesat
