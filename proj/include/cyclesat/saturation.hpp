#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclesat/cycles.hpp"
#include "cyclesat/graph.hpp"

namespace cyclesat {

enum class SatVerdict { saturated, not_free, not_saturated };

// Witness-carrying answer to "is G saturated for the family of cycles of
// length >= r": saturated means G has no such cycle, is connected, and every
// non-edge uv is joined by a path of at least r-1 edges (equivalently, adding
// uv creates a long cycle; both routes are checked against each other).
struct SaturationCertificate {
    int n = 0, m = 0, r = 0;
    SatVerdict verdict = SatVerdict::not_saturated;
    bool connected = false;
    std::vector<int> cycle_witness;  // verdict == not_free
    Edge offending_nonedge{-1, -1};  // verdict == not_saturated
    int offending_max_path = -1;     // longest path between the offending pair
    std::map<Edge, std::vector<int>> nonedge_witnesses;  // verdict == saturated
    bool cross_checked = false;

    bool saturated() const { return verdict == SatVerdict::saturated; }
};

struct SaturationOptions {
    SearchLimits limits;
    bool cross_check = true;       // re-verify each non-edge via G+uv cycle search
    bool collect_witnesses = true;
};

bool is_c_ge_r_free(const Graph& g, int r, const SearchLimits& lim = {});
SaturationCertificate check_saturation(const Graph& g, int r, const SaturationOptions& opts = {});

// Process-wide audit: every graph this module certifies as C>=r-free is
// checked against the bound m <= (r-1)(n-1)/2; violations are tallied.
struct ErdosGallaiAudit {
    static std::atomic<std::uint64_t> checked;
    static std::atomic<std::uint64_t> violations;
    static void record(const Graph& g, int r);
    static void reset();
};

// One representative per isomorphism class of connected graphs with n
// vertices and m edges, ordered by canonical key. n <= 10.
std::vector<Graph> enumerate_connected_graphs(int n, int m);

// Level cache so the oracle can walk edge counts without recomputation.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n);
    const std::vector<std::uint64_t>& level(int m);  // all graphs, key-sorted
    std::vector<Graph> connected_level(int m);
    int order() const { return n_; }

private:
    int n_;
    int max_edges_;
    std::vector<std::vector<std::uint64_t>> levels_;
};

struct SatResult {
    int n = 0, r = 0;
    bool found = false;
    int sat_value = 0;
    std::vector<std::string> witnesses;  // graph6, canonical order
    std::uint64_t graphs_examined = 0;
    int max_edges_searched = 0;
};

struct OracleOptions {
    int jobs = 1;
    SaturationOptions sat;
};

// Walks m = n-1, n, ... up to max_edges and stops at the first edge count
// admitting a saturated graph; result carries every minimum witness.
SatResult sat_oracle(int n, int r, int max_edges, const OracleOptions& opts = {});

}  // namespace cyclesat
