#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclesat/graph.hpp"

namespace cyclesat {

Graph complete_graph(int n);

// Three mutually adjacent centers t1,t2,t3 (labels 0,1,2) with a vertices
// joined to {t1,t2} (labels 3..a+2) and b joined to {t1,t3} (a+3..a+b+2).
// Saturated for the r=6 family only when a,b >= 2; smaller values still build.
Graph d_graph(int a, int b);

// K_{k-r} (labels 0..k-r-1) plus n-k+r independent vertices (k-r..n-1) all
// joined to the clique's first r vertices, the centers. Requires n>=k>=2r.
Graph h_graph(int n, int k, int r);

struct CactusBlock {
    enum class Family { k3, k4, k5, d, h } family;
    int p1 = 0, p2 = 0;  // d: (a,b) with a,b>=2; h: (t) in p1 with t>=6
};

// Connected graph assembled block by block: block i>=1 glues its local
// vertex `via[i]` onto global vertex `at[i]` of the prefix; remaining local
// vertices are appended in order. at[0]/via[0] are ignored.
Graph cactus(std::span<const CactusBlock> blocks, std::span<const int> at,
             std::span<const int> via);
Graph cactus(std::span<const CactusBlock> blocks, std::span<const int> at);
long long cactus_order_formula(std::span<const CactusBlock> blocks);

// Minimum saturated family for threshold 6 at order n >= 10: odd n is
// D((n-7)/2, 2) with one leaf pended to every non-center vertex; even n drops
// the highest-labeled leaf of the (n+1)-vertex graph.
Graph m6(int n);

// Flower snark J_k for odd k >= 3: 4k vertices, edges v4j-v4j+1, v4j-v4j+2,
// v4j-v4j+3, v4j+1-v4j+7, v4j+2-v4j+6, v4j+3-v4j+5 (indices mod 4k).
Graph isaacs_snark(int k);

// Replaces degree-3 vertex v by a triangle; the new triangle vertex wired to
// v's smallest neighbor reuses v's label, the other two take labels n, n+1.
Graph expand_vertex(const Graph& g, int v);

// Replaces edge uv (both endpoints of degree 3) by a bowtie: x1 reuses u's
// label, x2 reuses v's, y1,y2,z take n,n+1,n+2; x1/y1 inherit u's other
// neighbors in ascending order, x2/y2 inherit v's.
Graph expand_edge(const Graph& g, int u, int v);

// L(G;U,W): pendant edge at every vertex of U, triangle at every vertex of W.
// New labels are appended scanning hosts in ascending order (one vertex per
// pendant, two per triangle).
Graph attach(const Graph& g, std::span<const int> pendant_at,
             std::span<const int> triangle_at);

// C(G,H;uv): add edge uv between support vertices and delete the (lowest-
// labeled) leaf of each; generalized left fold for k parts.
Graph chain(std::span<const Graph> parts, std::span<const Edge> supports);

// M_{r,n} built over a good C_r-saturated base on r vertices. Case selection:
//   r <= n <= 2r                         pendants only,
//   2(k-1)r-2(k-2) < n < (4k-3)r/2       k-1 parts with pendants+triangles,
//   (4k-3)r/2 <= n <= 2kr-2(k-1)         k parts with pendants only;
// boundary n values resolve to the third case. Set choices are deterministic:
// pendant hosts are the lowest labels, triangle hosts the highest, and join
// supports the lowest eligible labels.
Graph m_rn(int r, int n, const Graph& base);

// Declarative recipe that deterministically produces a graph (JSON-round-
// trippable; the CLI consumes these).
struct ConstructionSpec {
    enum class Kind {
        kn, d, h, cactus, m6, snark, expand_vertex, expand_edge, attach, chain, mrn, good_base
    };
    Kind kind = Kind::kn;
    int a = 0, b = 0;            // d
    int n = 0, k = 0, r = 0;     // kn/h/m6/snark/mrn/good_base
    int u = -1, v = -1;          // expand_vertex (v), expand_edge (u,v)
    std::vector<int> set_u, set_w;            // attach
    std::vector<CactusBlock> blocks;          // cactus
    std::vector<int> at, via;                 // cactus
    std::vector<ConstructionSpec> children;   // expand/attach/chain/mrn base
    std::vector<Edge> joins;                  // chain supports
    std::string family_name() const;
};

Graph build(const ConstructionSpec& spec);

// Recipe for a good C_r-saturated graph on r >= 56 vertices with ceil(3r/2)
// edges: a flower snark with vertex/edge expansions chosen by r mod 8.
ConstructionSpec good_base(int r);

}  // namespace cyclesat
