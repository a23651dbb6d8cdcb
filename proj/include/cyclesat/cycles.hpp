#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclesat/blocks.hpp"
#include "cyclesat/graph.hpp"

namespace cyclesat {

// Every decision procedure here accepts an optional node-expansion cap and
// raises ResourceExhausted when it is hit, so an answer is exact or absent,
// never approximate.
struct SearchLimits {
    std::uint64_t max_nodes = UINT64_MAX;
};

struct ResourceExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact length of a longest cycle (0 for forests). Cycles live inside single
// blocks, so this is the max of per-block searches: subset DP up to 22-vertex
// blocks, branch-and-bound DFS above that.
int circumference(const Graph& g, const SearchLimits& lim = {});

// Decides circumference(g) >= r with early exit on the first witness; r >= 3.
bool has_cycle_at_least(const Graph& g, int r, const SearchLimits& lim = {});
// Same decision, returning a witness cycle (vertex sequence) when true.
std::optional<std::vector<int>> find_cycle_at_least(const Graph& g, int r,
                                                    const SearchLimits& lim = {});

struct PathResult {
    bool found = false;
    std::vector<int> path;  // vertex sequence u..v when found
};

// True iff some simple u-v path has at least min_edges edges. A u-v path is
// forced through the cut vertices between them, so the search decomposes into
// independent per-block longest-path queries summed along the route.
PathResult exists_path_at_least(const Graph& g, int u, int v, int min_edges,
                                const SearchLimits& lim = {});

bool has_hamiltonian_path(const Graph& g, int u, int v, const SearchLimits& lim = {});
bool has_hamiltonian_cycle(const Graph& g, const SearchLimits& lim = {});

// True iff a cycle with exactly `len` edges passes through the edge uv.
bool edge_on_cycle_of_length(const Graph& g, int u, int v, int len,
                             const SearchLimits& lim = {});

// Caches per-block longest-path answers for repeated queries on one graph
// (the saturation checker probes every non-edge).
class LongPathOracle {
public:
    explicit LongPathOracle(const Graph& g, SearchLimits lim = {});
    ~LongPathOracle();

    // Exact longest u-v path length (edges) and one witness; u != v, connected g.
    PathResult longest_path(int u, int v);
    int longest_path_length(int u, int v);

private:
    struct BlockCache;
    const Graph& g_;
    SearchLimits lim_;
    BlockDecomposition bd_;
    std::unique_ptr<BlockCache> cache_;
};

}  // namespace cyclesat
