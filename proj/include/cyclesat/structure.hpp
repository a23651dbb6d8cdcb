#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclesat/graph.hpp"
#include "cyclesat/saturation.hpp"

namespace cyclesat {

// Two vertex-disjoint triangles joined by at least one edge, as a subgraph.
bool contains_barbell(const Graph& g);

// Exactly one degree-4 vertex u0, all others degree 3, N(u0) induces a
// perfect matching {u1u2, v1v2}, and each matched pair has distinct
// neighbors outside {u0} and N(u0).
bool is_almost_3_regular(const Graph& g);

// 3-regular or almost-3-regular, with no barbell subgraph.
bool is_good_graph(const Graph& g);

// Block-structural test equivalent to saturation at cycle threshold 6:
// (i) connected with the bridge blocks forming a matching, (ii) no two
// triangle blocks sharing a cut vertex, (iii) no bridge touching a D/H
// center or any K3/K4 block vertex, (iv) after removing bridges every
// component is a single vertex or a cactus over {K3,K4,K5,D,H} blocks that
// has a K5/D/H block whenever it has at most one K3/K4 block. Complete
// graphs of order <= 5 are saturated outright (no non-edge to add) and are
// accepted before the block conditions.
bool c6_characterization(const Graph& g);

// Degree/adjacency vertex classes; on saturated graphs these agree with the
// definitions used by the structural analysis, and on arbitrary connected
// graphs the later classes exclude the earlier ones so the result is always
// a partition.
struct StructurePartition {
    std::vector<int> x1;    // leaves
    std::vector<int> x2;    // degree-2, no degree-2 neighbor
    std::vector<int> x2p;   // degree-2 with a degree-2 neighbor
    std::vector<int> x3;    // degree-3 support vertices
    std::vector<int> xge4;  // degree->=4 support vertices
    std::vector<int> y;     // non-leaf neighborhood of x2' u x2 u x3
    std::vector<int> y1;    // isolated in G[Y]
    std::vector<int> y2;    // Y \ Y1
    std::vector<int> z;     // everything else

    std::map<std::string, int> counts() const;
};

StructurePartition structure_partition(const Graph& g);

struct Clause {
    bool holds = true;
    bool applicable = true;  // vacuous clauses stay true but are flagged
    std::string detail;
};

struct PropertyReport {
    std::map<std::string, Clause> items;
    bool all_hold() const;
};

// The per-class emptiness/matching/common-neighbor/adjacency properties of a
// saturated graph ("i".."vi"), plus the proof-level degree claims
// ("claim1".."claim3") over H = G[Y u Z u X>=4]. Requires a saturated input.
PropertyReport check_structure_properties(const Graph& g, int r,
                                          const SaturationCertificate& cert);
PropertyReport check_structure_properties(const Graph& g, int r);

// Counting identities/inequalities ("a", "b", "c") plus the edge lower bound
// e >= n + r/2 ("edge_bound", evaluated when n/2 <= r <= n).
PropertyReport check_counting_inequalities(const Graph& g, int r,
                                            const SaturationCertificate& cert);
PropertyReport check_counting_inequalities(const Graph& g, int r);

}  // namespace cyclesat
