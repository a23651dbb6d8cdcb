#include "cyclesat/saturation.hpp"

#include <algorithm>
#include <stdexcept>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "cyclesat/canonical.hpp"
#include "cyclesat/graph6.hpp"

namespace cyclesat {

std::atomic<std::uint64_t> ErdosGallaiAudit::checked{0};
std::atomic<std::uint64_t> ErdosGallaiAudit::violations{0};

void ErdosGallaiAudit::record(const Graph& g, int r) {
    checked.fetch_add(1, std::memory_order_relaxed);
    // m <= (r-1)(n-1)/2 for every C>=r-free graph.
    long long lhs = 2ll * g.size();
    long long rhs = static_cast<long long>(r - 1) * (g.order() - 1);
    if (lhs > rhs) violations.fetch_add(1, std::memory_order_relaxed);
}

void ErdosGallaiAudit::reset() {
    checked = 0;
    violations = 0;
}

bool is_c_ge_r_free(const Graph& g, int r, const SearchLimits& lim) {
    if (r < 3) throw std::invalid_argument("cycle threshold must be at least 3");
    bool free = !has_cycle_at_least(g, r, lim);
    if (free) ErdosGallaiAudit::record(g, r);
    return free;
}

SaturationCertificate check_saturation(const Graph& g, int r, const SaturationOptions& opts) {
    if (r < 3) throw std::invalid_argument("cycle threshold must be at least 3");
    SaturationCertificate cert;
    cert.n = g.order();
    cert.m = g.size();
    cert.r = r;
    cert.connected = is_connected(g);

    if (auto cyc = find_cycle_at_least(g, r, opts.limits)) {
        cert.verdict = SatVerdict::not_free;
        cert.cycle_witness = *cyc;
        return cert;
    }
    ErdosGallaiAudit::record(g, r);

    if (!cert.connected) {
        auto comp = component_ids(g);
        cert.verdict = SatVerdict::not_saturated;
        for (int v = 1; v < g.order(); ++v)
            if (comp[v] != comp[0]) {
                cert.offending_nonedge = {0, v};
                break;
            }
        cert.offending_max_path = -1;  // no path at all
        return cert;
    }

    LongPathOracle oracle(g, opts.limits);
    cert.cross_checked = opts.cross_check;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            PathResult pr;
            bool creates = false;
            try {
                pr = oracle.longest_path(u, v);
                if (opts.cross_check) creates = has_cycle_at_least(g.with_edge(u, v), r, opts.limits);
            } catch (const ResourceExhausted& e) {
                throw ResourceExhausted(std::string(e.what()) + " while checking non-edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
            }
            int len = pr.found ? static_cast<int>(pr.path.size()) - 1 : -1;
            bool long_enough = len >= r - 1;
            if (opts.cross_check && creates != long_enough)
                throw std::logic_error(
                    "saturation cross-check mismatch at non-edge (" + std::to_string(u) + "," +
                    std::to_string(v) + "): path route says " + (long_enough ? "yes" : "no") +
                    ", cycle route says " + (creates ? "yes" : "no"));
            if (!long_enough) {
                cert.verdict = SatVerdict::not_saturated;
                cert.offending_nonedge = {u, v};
                cert.offending_max_path = len;
                return cert;
            }
            if (opts.collect_witnesses) cert.nonedge_witnesses[{u, v}] = std::move(pr.path);
        }
    }
    cert.verdict = SatVerdict::saturated;
    return cert;
}

// ---------------------------------------------------------------------------

GraphEnumerator::GraphEnumerator(int n) : n_(n), max_edges_(n * (n - 1) / 2) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("enumeration supported for 1 <= n <= 10");
    levels_.resize(max_edges_ + 1);
    levels_[0] = {canonical_key_small(Graph::empty(n))};
}

const std::vector<std::uint64_t>& GraphEnumerator::level(int m) {
    if (m < 0 || m > max_edges_) throw std::invalid_argument("edge count out of range");
    for (int k = 1; k <= m; ++k) {
        if (!levels_[k].empty()) continue;  // already materialized
        std::unordered_set<std::uint64_t> next;
        for (std::uint64_t key : levels_[k - 1]) {
            Graph parent = graph_from_key(n_, key);
            for (int u = 0; u < n_; ++u)
                for (int v = u + 1; v < n_; ++v) {
                    if (parent.has_edge(u, v)) continue;
                    next.insert(canonical_key_small(parent.with_edge(u, v)));
                }
        }
        levels_[k].assign(next.begin(), next.end());
        std::sort(levels_[k].begin(), levels_[k].end());
    }
    return levels_[m];
}

std::vector<Graph> GraphEnumerator::connected_level(int m) {
    std::vector<Graph> out;
    for (std::uint64_t key : level(m)) {
        Graph g = graph_from_key(n_, key);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int n, int m) {
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("edge count out of range");
    GraphEnumerator en(n);
    return en.connected_level(m);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<char> run_predicate(const std::vector<Graph>& candidates, int r,
                                const OracleOptions& opts) {
    std::vector<char> saturated(candidates.size(), 0);
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || candidates.size() < 2) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            saturated[i] = check_saturation(candidates[i], r, opts.sat).saturated();
        return saturated;
    }
    std::atomic<std::size_t> next{0};
    std::mutex fail_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        try {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= candidates.size()) break;
                saturated[i] = check_saturation(candidates[i], r, opts.sat).saturated();
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(fail_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return saturated;
}

}  // namespace

SatResult sat_oracle(int n, int r, int max_edges, const OracleOptions& opts) {
    SatResult res;
    res.n = n;
    res.r = r;
    if (max_edges < n - 1) throw std::invalid_argument("max_edges below n-1 cannot be connected");
    max_edges = std::min(max_edges, n * (n - 1) / 2);
    res.max_edges_searched = max_edges;

    SaturationOptions sat_opts = opts.sat;
    sat_opts.collect_witnesses = false;
    OracleOptions run_opts = opts;
    run_opts.sat = sat_opts;

    GraphEnumerator en(n);
    for (int m = std::max(0, n - 1); m <= max_edges; ++m) {
        std::vector<Graph> candidates = en.connected_level(m);
        res.graphs_examined += candidates.size();
        std::vector<char> sat = run_predicate(candidates, r, run_opts);
        std::vector<std::pair<CanonicalCode, std::string>> hits;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (sat[i]) hits.emplace_back(canonical_code(candidates[i]), emit_graph6(candidates[i]));
        if (!hits.empty()) {
            std::sort(hits.begin(), hits.end());
            res.found = true;
            res.sat_value = m;
            res.max_edges_searched = m;
            for (auto& [code, g6] : hits) res.witnesses.push_back(std::move(g6));
            return res;
        }
    }
    return res;
}

}  // namespace cyclesat
