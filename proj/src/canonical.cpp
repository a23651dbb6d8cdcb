#include "cyclesat/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace cyclesat {

namespace {

void pack_bit(std::vector<std::uint64_t>& words, long long idx, bool bit) {
    if (bit) words[idx >> 6] |= 1ull << (63 - (idx & 63));
}

std::vector<std::uint64_t> pack_code(const std::vector<std::uint64_t>& adj,
                                     const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    long long idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            pack_bit(words, idx, (adj[perm[row]] >> perm[col]) & 1u);
    return words;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Orbits of the subgroup generated by the automorphisms that fix every vertex
// of `fixed` pointwise. Conservative (may under-merge), which only costs time.
UnionFind stabilizer_orbits(int n, const std::vector<std::vector<int>>& gens,
                            const std::vector<int>& fixed, int fixed_count) {
    UnionFind uf(n);
    for (const auto& g : gens) {
        bool ok = true;
        for (int i = 0; i < fixed_count && ok; ++i) ok = g[fixed[i]] == fixed[i];
        if (!ok) continue;
        for (int v = 0; v < n; ++v) uf.unite(v, g[v]);
    }
    return uf;
}

// ---------------------------------------------------------------------------
// Exact minimum-code search, n <= 16.

struct ExactCanon {
    int n;
    std::vector<std::uint32_t> adj;  // bitmask rows
    std::vector<int> perm;           // position -> vertex
    std::uint32_t used = 0;
    std::vector<std::uint32_t> cols;  // cols[p]: adjacency of perm[p] vs positions <p
    std::vector<std::uint32_t> best_cols;
    std::vector<int> best_perm;
    bool have_best = false;
    std::vector<std::vector<int>> gens;

    explicit ExactCanon(const Graph& g) : n(g.order()), adj(n, 0), perm(n, -1), cols(n, 0) {
        for (int v = 0; v < n; ++v)
            g.for_neighbors(v, [&](int u) { adj[v] |= 1u << u; });
    }

    std::uint32_t column(int p, int v) const {
        std::uint32_t c = 0;
        for (int i = 0; i < p; ++i) c = (c << 1) | ((adj[perm[i]] >> v) & 1u);
        return c;
    }

    void record_automorphism() {
        std::vector<int> sigma(n);
        for (int i = 0; i < n; ++i) sigma[best_perm[i]] = perm[i];
        bool identity = true;
        for (int v = 0; v < n && identity; ++v) identity = sigma[v] == v;
        if (!identity) gens.push_back(std::move(sigma));
    }

    // Returns true when best was replaced inside this subtree.
    bool dfs(int p, bool tight) {
        if (p == n) {
            if (have_best && tight) {
                record_automorphism();
                return false;
            }
            best_cols = cols;
            best_perm = perm;
            have_best = true;
            return true;
        }
        UnionFind uf = stabilizer_orbits(n, gens, perm, p);
        std::uint32_t tried = 0;
        bool replaced = false;
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            int root = uf.find(v);
            if (tried & (1u << root)) continue;
            tried |= 1u << root;
            std::uint32_t col = column(p, v);
            bool child_tight;
            if (have_best) {
                if (tight && col > best_cols[p]) continue;
                child_tight = tight && col == best_cols[p];
            } else {
                child_tight = false;
            }
            perm[p] = v;
            cols[p] = col;
            used |= 1u << v;
            if (dfs(p + 1, child_tight)) {
                replaced = true;
                tight = true;  // current prefix now equals the new best prefix
            }
            used &= ~(1u << v);
            perm[p] = -1;
        }
        return replaced;
    }

    std::vector<std::uint64_t> run() {
        if (n == 0) return {};
        dfs(0, false);
        // Repack the column form into the flat bitstring.
        long long bits = static_cast<long long>(n) * (n - 1) / 2;
        std::vector<std::uint64_t> words((bits + 63) / 64, 0);
        long long idx = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row, ++idx)
                pack_bit(words, idx, (best_cols[col] >> (col - 1 - row)) & 1u);
        return words;
    }
};

// ---------------------------------------------------------------------------
// Refinement-based canonical search, n <= 64.

struct RefineCanon {
    int n;
    std::vector<std::uint64_t> adj;
    std::vector<std::vector<int>> gens;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_perm;
    bool have_best = false;
    std::vector<int> branch;  // individualized vertices along the current path

    explicit RefineCanon(const Graph& g) : n(g.order()), adj(n, 0) {
        for (int v = 0; v < n; ++v)
            g.for_neighbors(v, [&](int u) { adj[v] |= 1ull << u; });
    }

    using Cells = std::vector<std::vector<int>>;

    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
                std::uint64_t smask = 0;
                for (int v : cells[si]) smask |= 1ull << v;
                for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                    if (cells[ci].size() <= 1) continue;
                    // Group the cell by edge count into the splitter.
                    std::array<std::vector<int>, 65> buckets;
                    int lo = 65, hi = -1;
                    for (int v : cells[ci]) {
                        int c = std::popcount(adj[v] & smask);
                        buckets[c].push_back(v);
                        lo = std::min(lo, c);
                        hi = std::max(hi, c);
                    }
                    if (lo == hi) continue;
                    Cells groups;
                    for (int c = lo; c <= hi; ++c)
                        if (!buckets[c].empty()) groups.push_back(std::move(buckets[c]));
                    cells.erase(cells.begin() + ci);
                    cells.insert(cells.begin() + ci, std::make_move_iterator(groups.begin()),
                                 std::make_move_iterator(groups.end()));
                    changed = true;
                }
            }
        }
    }

    void leaf(const Cells& cells) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = cells[i][0];
        auto code = pack_code(adj, perm);
        if (!have_best || code < best_code) {
            best_code = std::move(code);
            best_perm = std::move(perm);
            have_best = true;
        } else if (code == best_code) {
            std::vector<int> sigma(n);
            for (int i = 0; i < n; ++i) sigma[best_perm[i]] = perm[i];
            bool identity = true;
            for (int v = 0; v < n && identity; ++v) identity = sigma[v] == v;
            if (!identity) gens.push_back(std::move(sigma));
        }
    }

    void recurse(const Cells& cells) {
        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) {
            leaf(cells);
            return;
        }
        UnionFind uf = stabilizer_orbits(n, gens, branch, static_cast<int>(branch.size()));
        std::uint64_t tried = 0;
        for (int v : cells[target]) {
            int root = uf.find(v);
            if (tried & (1ull << root)) continue;
            tried |= 1ull << root;
            Cells next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[target])
                        if (u != v) rest.push_back(u);
                    next.push_back(std::move(rest));
                } else {
                    next.push_back(cells[i]);
                }
            }
            refine(next);
            branch.push_back(v);
            recurse(next);
            branch.pop_back();
        }
    }

    std::vector<std::uint64_t> run() {
        if (n == 0) return {};
        Cells cells(1);
        cells[0].resize(n);
        std::iota(cells[0].begin(), cells[0].end(), 0);
        refine(cells);
        recurse(cells);
        return best_code;
    }
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
    int n = g.order();
    if (n > 64) throw std::invalid_argument("canonical_code: order above 64 unsupported");
    CanonicalCode code;
    code.n = n;
    if (n <= 16) {
        ExactCanon ec(g);
        code.words = ec.run();
    } else {
        RefineCanon rc(g);
        code.words = rc.run();
    }
    return code;
}

std::uint64_t canonical_key_small(const Graph& g) {
    int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_key_small: order above 11");
    if (n <= 1) return 0;
    RefineCanon rc(g);
    auto words = rc.run();
    return words.empty() ? 0 : words[0];
}

Graph graph_from_key(int n, std::uint64_t key) {
    GraphBuilder b(n);
    long long idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if ((key >> (63 - idx)) & 1u) b.add_edge(row, col);
    return b.take();
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace cyclesat
