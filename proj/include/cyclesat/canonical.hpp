#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cyclesat/graph.hpp"

namespace cyclesat {

// Canonical adjacency certificate: the upper-triangle bitstring (column-major,
// same bit order as graph6) of the graph under a canonical labeling, packed
// MSB-first so word-wise comparison equals bitstring comparison.
// Two graphs have equal codes iff they are isomorphic.
struct CanonicalCode {
    int n = 0;
    std::vector<std::uint64_t> words;

    auto operator<=>(const CanonicalCode&) const = default;
};

// For n <= 16 this is the exact lexicographic minimum over all vertex
// relabelings (branch-and-bound with automorphism pruning). For 16 < n <= 64
// it is the minimum over the labelings generated by equitable-partition
// refinement with individualization, which keeps the iso-discrimination
// contract at sizes where the exhaustive search is impractical.
CanonicalCode canonical_code(const Graph& g);

// Refinement-based canonical bits packed into one word; requires n <= 11
// (at most 55 triangle bits). This is the enumerator's dedup key.
std::uint64_t canonical_key_small(const Graph& g);
Graph graph_from_key(int n, std::uint64_t key);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace cyclesat
