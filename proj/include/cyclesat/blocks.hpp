#pragma once

#include <optional>
#include <vector>

#include "cyclesat/graph.hpp"

namespace cyclesat {

// Structural class of a block, matched exactly:
//   k2..k5    complete blocks of that order,
//   d_family  D(a,b) with a,b >= 2 (triangle core t1t2t3, a vertices joined to
//             {t1,t2}, b joined to {t1,t3}),
//   h_family  H(t,6,2) with t >= 6 (K4 plus t-4 vertices joined to two fixed
//             clique vertices, the "centers"),
//   other     anything else.
enum class BlockKind { k2, k3, k4, k5, d_family, h_family, other };

struct Block {
    std::vector<int> vertices;  // ascending original labels
    std::vector<Edge> edges;
    BlockKind kind = BlockKind::other;
    // For d_family/h_family: the center vertices ({t1,t2,t3} resp. {c1,c2}).
    std::vector<int> centers;
    bool is_bridge() const { return edges.size() == 1; }
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<char> is_cut;                    // per vertex
    std::vector<std::vector<int>> blocks_of;     // per vertex: block indices
    std::vector<int> bridge_blocks;              // indices of K2 blocks (B_2)
    int b2 = 0, b3 = 0, b4 = 0, b5 = 0;
    int d_count = 0, h_count = 0;

    // Blocks crossed by every u-v path, in order, with the entry/exit vertex
    // forced by the block-cut tree. Requires u != v in a connected graph.
    struct RouteStep {
        int block;
        int in;
        int out;
    };
    std::vector<RouteStep> route(int u, int v) const;

private:
    friend BlockDecomposition block_decomposition(const Graph&);
    // block-cut tree: node 0..B-1 = blocks, then one node per cut vertex
    std::vector<std::vector<int>> tree_adj_;
    std::vector<int> cut_node_;    // per vertex, -1 if not a cut vertex
    std::vector<int> node_vertex_;  // per tree node: its cut vertex, -1 for blocks
};

// Throws std::invalid_argument on disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

// The bridge blocks, viewed as edges, are pairwise non-incident.
bool b2_is_matching(const Graph& g);

// Internal helper shared with the cycle engine: biconnected components of an
// arbitrary (possibly disconnected) graph as vertex sets.
std::vector<std::vector<int>> biconnected_vertex_sets(const Graph& g);

}  // namespace cyclesat
