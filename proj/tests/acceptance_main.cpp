// Acceptance suite: one pass/fail line per criterion. Default mode finishes
// in minutes; --extended adds the long runs (order-9 search, the 28-vertex
// snark, the r=56 base verification being counts-only either way).
//
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>
#include <vector>

#include "cyclesat/bounds.hpp"
#include "cyclesat/canonical.hpp"
#include "cyclesat/constructions.hpp"
#include "cyclesat/cycles.hpp"
#include "cyclesat/graph6.hpp"
#include "cyclesat/saturation.hpp"
#include "cyclesat/structure.hpp"

using namespace cyclesat;

namespace {

struct Instance {
    Graph g;
    int r;
    std::string source;
};

struct Outcome {
    int id;
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;
    double secs = 0;
};

class Suite {
public:
    explicit Suite(bool extended) : extended_(extended) {}

    int run() {
        ErdosGallaiAudit::reset();
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
        criterion10();
        criterion11();

        int failures = 0;
        for (const auto& o : outcomes_) {
            std::printf("criterion %2d [%s]: %s (%.1fs) %s\n", o.id,
                        o.pass ? "PASS" : "FAIL", o.name.c_str(), o.secs,
                        o.notes.empty() ? "" : "");
            for (const auto& note : o.notes) std::printf("    - %s\n", note.c_str());
            failures += o.pass ? 0 : 1;
        }
        std::printf("%d/%zu criteria passed%s\n", static_cast<int>(outcomes_.size()) - failures,
                    outcomes_.size(), extended_ ? " (extended mode)" : "");
        return failures;
    }

private:
    bool extended_;
    std::vector<Instance> instances_;
    std::vector<Outcome> outcomes_;

    SaturationOptions sat_opts(bool witnesses = false) const {
        SaturationOptions o;
        o.cross_check = true;
        o.collect_witnesses = witnesses;
        return o;
    }

    template <class F>
    void timed(int id, const std::string& name, F&& body) {
        Outcome o;
        o.id = id;
        o.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            body(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        o.secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcomes_.push_back(std::move(o));
    }

    void expect(Outcome& o, bool cond, const std::string& what) {
        if (!cond) {
            o.pass = false;
            o.notes.push_back("FAILED: " + what);
        }
    }

    void keep_witnesses(const SatResult& res, int r, const std::string& tag) {
        for (const auto& w : res.witnesses)
            instances_.push_back({parse_graph6(w), r, tag + " witness " + w});
    }

    // -- criterion bodies ---------------------------------------------------

    void criterion1() {
        timed(1, "exact saturation numbers at threshold 6", [&](Outcome& o) {
            int expected[] = {0, 0, 0, 0, 0, 0, 9, 11, 12, 13};
            for (int n = 6; n <= (extended_ ? 9 : 8); ++n) {
                SatResult res = sat_oracle(n, 6, n * (n - 1) / 2);
                expect(o, res.found && res.sat_value == expected[n],
                       "sat(" + std::to_string(n) + ", >=6) = " +
                           std::to_string(res.found ? res.sat_value : -1) + ", expected " +
                           std::to_string(expected[n]));
                o.notes.push_back("n=" + std::to_string(n) + ": sat=" +
                                  std::to_string(res.sat_value) + ", " +
                                  std::to_string(res.witnesses.size()) + " witness(es), " +
                                  std::to_string(res.graphs_examined) + " graphs examined");
                keep_witnesses(res, 6, "oracle r=6 n=" + std::to_string(n));
            }
            if (!extended_) o.notes.push_back("n=9 requires --extended");
        });
    }

    void criterion2() {
        timed(2, "exact saturation numbers at thresholds 4 and 5", [&](Outcome& o) {
            for (int n = 5; n <= 8; ++n) {
                SatResult r4 = sat_oracle(n, 4, n * (n - 1) / 2);
                int want4 = n + (n - 3) / 4;
                expect(o, r4.found && r4.sat_value == want4,
                       "sat(" + std::to_string(n) + ", >=4) expected " + std::to_string(want4));
                keep_witnesses(r4, 4, "oracle r=4");

                SatResult r5 = sat_oracle(n, 5, n * (n - 1) / 2);
                int want5 = (10 * (n - 1) + 6) / 7;  // ceil form
                expect(o, r5.found && r5.sat_value == want5,
                       "sat(" + std::to_string(n) + ", >=5) = " +
                           std::to_string(r5.found ? r5.sat_value : -1) + ", expected " +
                           std::to_string(want5));
                if (want5 != 10 * (n - 1) / 7)
                    o.notes.push_back("n=" + std::to_string(n) +
                                      ": the floor variant of the threshold-5 form gives " +
                                      std::to_string(10 * (n - 1) / 7) +
                                      "; exhaustive search confirms the ceiling value " +
                                      std::to_string(r5.sat_value));
                keep_witnesses(r5, 5, "oracle r=5");
            }
        });
    }

    void criterion3() {
        timed(3, "threshold 3 gives the trees", [&](Outcome& o) {
            int tree_counts[] = {0, 1, 1, 1, 2, 3, 6, 11};
            for (int n = 4; n <= 7; ++n) {
                SatResult res = sat_oracle(n, 3, n * (n - 1) / 2);
                expect(o, res.found && res.sat_value == n - 1,
                       "sat(" + std::to_string(n) + ", >=3) = n-1");
                expect(o, static_cast<int>(res.witnesses.size()) == tree_counts[n],
                       std::to_string(n) + "-vertex witness count " +
                           std::to_string(res.witnesses.size()) + " != tree count " +
                           std::to_string(tree_counts[n]));
                for (const auto& w : res.witnesses) {
                    Graph g = parse_graph6(w);
                    expect(o, g.size() == n - 1 && is_connected(g),
                           "witness " + w + " is not a tree");
                }
            }
        });
    }

    void criterion4() {
        timed(4, "construction verification (D, H, M6 families)", [&](Outcome& o) {
            for (int a = 2; a <= 4; ++a)
                for (int b = 2; b <= 4; ++b) {
                    Graph g = d_graph(a, b);
                    bool sat = check_saturation(g, 6, sat_opts()).saturated();
                    expect(o, sat, "D(" + std::to_string(a) + "," + std::to_string(b) +
                                       ") saturated at 6");
                    instances_.push_back({g, 6, "D(" + std::to_string(a) + "," +
                                                   std::to_string(b) + ")"});
                }
            for (int n = 6; n <= 12; ++n) {
                Graph g = h_graph(n, 6, 2);
                expect(o, check_saturation(g, 6, sat_opts()).saturated(),
                       "H(" + std::to_string(n) + ",6,2) saturated at 6");
                instances_.push_back({g, 6, "H(" + std::to_string(n) + ",6,2)"});
            }
            for (int n = 10; n <= 16; ++n) {
                Graph g = m6(n);
                int want = (3 * (n - 1) + 1) / 2;
                expect(o, g.order() == n && g.size() == want,
                       "M6(" + std::to_string(n) + ") size " + std::to_string(g.size()) +
                           " != ceil(3(n-1)/2) = " + std::to_string(want));
                expect(o, check_saturation(g, 6, sat_opts()).saturated(),
                       "M6(" + std::to_string(n) + ") saturated at 6");
                instances_.push_back({g, 6, "M6(" + std::to_string(n) + ")"});
            }
        });
    }

    void criterion5() {
        timed(5, "characterization equivalence over all connected graphs to n=8",
              [&](Outcome& o) {
                  // connected classes per order (classical counts, re-derived
                  // here by the enumerator itself)
                  long long connected_counts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
                  long long disagreements = 0, seen_total = 0;
                  for (int n = 1; n <= 8; ++n) {
                      long long seen = 0;
                      GraphEnumerator en(n);
                      SaturationOptions opts = sat_opts();
                      for (int m = std::max(0, n - 1); m <= n * (n - 1) / 2; ++m) {
                          for (const Graph& g : en.connected_level(m)) {
                              ++seen;
                              bool sat = check_saturation(g, 6, opts).saturated();
                              if (sat != c6_characterization(g)) {
                                  ++disagreements;
                                  if (disagreements <= 5)
                                      o.notes.push_back("disagreement at " + emit_graph6(g));
                              }
                          }
                      }
                      expect(o, seen == connected_counts[n],
                             "connected class count at n=" + std::to_string(n) + " was " +
                                 std::to_string(seen) + ", expected " +
                                 std::to_string(connected_counts[n]));
                      seen_total += seen;
                  }
                  expect(o, disagreements == 0,
                         std::to_string(disagreements) + " characterization disagreements");
                  o.notes.push_back(std::to_string(seen_total) +
                                    " connected graphs swept, zero disagreements required");
              });
    }

    void criterion6() {
        timed(6, "snark certification at desk scale", [&](Outcome& o) {
            auto certify = [&](int k, int r, Outcome& out) {
                Graph jk = isaacs_snark(k);
                expect(out, is_good_graph(jk), "J_" + std::to_string(k) + " is good");
                expect(out, !has_hamiltonian_cycle(jk),
                       "J_" + std::to_string(k) + " nonhamiltonian");
                SaturationCertificate cert = check_saturation(jk, r, sat_opts());
                expect(out, cert.saturated(),
                       "J_" + std::to_string(k) + " saturated at " + std::to_string(r));
                for (auto [u, v] : jk.edges())
                    expect(out, edge_on_cycle_of_length(jk, u, v, r - 1),
                           "edge " + std::to_string(u) + "-" + std::to_string(v) + " of J_" +
                               std::to_string(k) + " on a " + std::to_string(r - 1) + "-cycle");
                instances_.push_back({jk, r, "J_" + std::to_string(k)});
            };
            certify(5, 20, o);
            if (extended_)
                certify(7, 28, o);
            else
                o.notes.push_back("J_7 run requires --extended");
        });
    }

    void criterion7() {
        timed(7, "pendant/triangle constructions over the snark base", [&](Outcome& o) {
            Graph j5 = isaacs_snark(5);
            auto check_mrn = [&](int n, int want_m, Outcome& out) {
                Graph g = m_rn(20, n, j5);
                expect(out, g.order() == n && g.size() == want_m,
                       "M_{20," + std::to_string(n) + "} has m=" + std::to_string(g.size()) +
                           ", expected " + std::to_string(want_m));
                SaturationCertificate cert = check_saturation(g, 20, sat_opts());
                expect(out, cert.saturated(),
                       "M_{20," + std::to_string(n) + "} saturated at 20");
                instances_.push_back({g, 20, "M_{20," + std::to_string(n) + "}"});
            };
            for (int n : {25, 30, 40}) check_mrn(n, n + 10, o);
            check_mrn(45, 60, o);
            check_mrn(50, 71, o);
            for (int r = 56; r <= 63; ++r) {
                Graph base = build(good_base(r));
                expect(o, base.order() == r && base.size() == (3 * r + 1) / 2,
                       "base at r=" + std::to_string(r) + " counts");
                expect(o, is_good_graph(base), "base at r=" + std::to_string(r) + " is good");
            }
            o.notes.push_back("r=56..63 bases verified by counts and goodness only");
        });
    }

    void criterion8() {
        timed(8, "edge lower bound on every produced instance", [&](Outcome& o) {
            // the bound e >= n + r/2 is a statement about thresholds r >= 6
            // with r <= n <= 2r; instances outside that regime do not carry it
            int applicable = 0;
            for (const auto& inst : instances_) {
                long long n = inst.g.order(), e = inst.g.size(), r = inst.r;
                if (r < 6 || !(r <= n && n <= 2 * r)) continue;
                ++applicable;
                expect(o, 2 * e >= 2 * n + r,
                       inst.source + ": e=" + std::to_string(e) + " < n+r/2");
            }
            for (int n : {25, 30, 40}) {
                Graph g = m_rn(20, n, isaacs_snark(5));
                expect(o, g.size() == n + 10,
                       "equality case M_{20," + std::to_string(n) + "}: e = n+ceil(r/2)");
            }
            o.notes.push_back(std::to_string(applicable) + " instances in the r<=n<=2r range");
        });
    }

    void criterion9() {
        timed(9, "structure suite over every saturated instance", [&](Outcome& o) {
            int checked = 0;
            bool d22_exception_seen = false;
            for (const auto& inst : instances_) {
                if (inst.r < 6) continue;
                ++checked;
                SaturationOptions opts = sat_opts();
                SaturationCertificate cert = check_saturation(inst.g, inst.r, opts);
                if (!cert.saturated()) {
                    expect(o, false, inst.source + " no longer verifies as saturated");
                    continue;
                }
                PropertyReport props = check_structure_properties(inst.g, inst.r, cert);
                for (const char* item : {"i", "ii", "iii", "iv", "v"})
                    expect(o, props.items.at(item).holds,
                           inst.source + ": property (" + item + ") fails: " +
                               props.items.at(item).detail);
                if (inst.r >= 7) {
                    expect(o, props.items.at("vi").holds,
                           inst.source + ": property (vi) fails: " + props.items.at("vi").detail);
                    for (const char* claim : {"claim1", "claim2", "claim3"})
                        expect(o, props.items.at(claim).holds,
                               inst.source + ": " + claim + " fails: " +
                                   props.items.at(claim).detail);
                } else if (!props.items.at("vi").holds) {
                    // reported, not asserted, at threshold six
                    if (inst.source == "D(2,2)") {
                        d22_exception_seen =
                            props.items.at("vi").detail.find("= 6/3") != std::string::npos;
                        o.notes.push_back("D(2,2): (vi) average degree 6/3 = 2 < 5/2, reported");
                    }
                }
                PropertyReport cor = check_counting_inequalities(inst.g, inst.r, cert);
                for (const char* item : {"a", "b", "c"})
                    expect(o, cor.items.at(item).holds,
                           inst.source + ": inequality (" + item + ") fails: " +
                               cor.items.at(item).detail);
            }
            expect(o, d22_exception_seen, "the D(2,2) average-degree exception was reproduced");
            o.notes.push_back(std::to_string(checked) + " saturated instances checked");
        });
    }

    void criterion10() {
        timed(10, "rate function: pinned values, continuity, range", [&](Outcome& o) {
            expect(o, g_value(Rational(1)) == Rational(3, 2), "g(1) = 3/2");
            expect(o, g_value(Rational(1, 2)) == Rational(5, 4), "g(1/2) = 5/4");
            expect(o, g_value(Rational(2, 5)) == Rational(7, 5), "g(2/5) = 7/5");
            for (long long k = 2; k <= 12; ++k) {
                Rational peak(2, 4 * k - 3);
                Rational want(5 * k - 3, 4 * k - 3);
                expect(o, g_value(peak) == want, "continuity at 2/(4k-3), k=" + std::to_string(k));
                expect(o, Rational(2) - Rational(3 * k - 3, 2) * peak == want,
                       "falling piece agrees at its left end, k=" + std::to_string(k));
                Rational valley(1, 2 * k - 2);
                expect(o, g_value(valley) == Rational(5, 4),
                       "valley value at 1/(2k-2), k=" + std::to_string(k));
                // the adjacent piece above the valley (the k-1 rising piece,
                // or the closed [1/2,1] piece when k=2) has the same limit
                Rational above = k == 2 ? Rational(1) + Rational(1, 2) * valley
                                        : Rational(1) + Rational(k - 1, 2) * valley;
                expect(o, above == Rational(5, 4),
                       "adjacent piece limit at 1/(2k-2), k=" + std::to_string(k));
            }
            int minima = 0;
            for (int i = 1; i <= 10000; ++i) {
                Rational x(i, 10000);
                Rational v = g_value(x);
                bool in_range = Rational(5, 4) <= v && v <= Rational(3, 2);
                if (!in_range) {
                    expect(o, false, "g out of [5/4, 3/2] at x = " + x.str());
                    break;
                }
                bool valley_point = x.num == 1 && x.den % 2 == 0;
                if (v == Rational(5, 4)) {
                    ++minima;
                    if (!valley_point) {
                        expect(o, false, "g attains 5/4 off the 1/(2k-2) set at x = " + x.str());
                        break;
                    }
                } else if (valley_point) {
                    expect(o, false, "valley point without minimum value at x = " + x.str());
                    break;
                }
            }
            o.notes.push_back("10^4-sample range is [5/4, 3/2]; the bound is strict except at "
                              "the " + std::to_string(minima) +
                              " sampled minima x = 1/(2k-2), where g = 5/4 exactly");
        });
    }

    void criterion11() {
        timed(11, "no free graph ever beat the edge maximum", [&](Outcome& o) {
            expect(o, ErdosGallaiAudit::checked.load() > 0, "audit saw no graphs");
            expect(o, ErdosGallaiAudit::violations.load() == 0,
                   std::to_string(ErdosGallaiAudit::violations.load()) + " violations recorded");
            o.notes.push_back(std::to_string(ErdosGallaiAudit::checked.load()) +
                              " free graphs audited against (r-1)(n-1)/2");
        });
    }
};

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;
    Suite suite(extended);
    return suite.run();
}
