// Command-line front end: construct the saturated families, verify saturation
// certificates, search exact saturation numbers, analyze structure, and
// tabulate bounds. Graphs travel as graph6 lines; reports as JSON.
//
// Exit codes: 0 success/affirmative, 1 negative verdict, 2 usage or parse
// error, 3 search budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cyclesat/bounds.hpp"
#include "cyclesat/canonical.hpp"
#include "cyclesat/constructions.hpp"
#include "cyclesat/graph6.hpp"
#include "cyclesat/json_io.hpp"
#include "cyclesat/saturation.hpp"
#include "cyclesat/structure.hpp"

using nlohmann::json;
using namespace cyclesat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<std::string> read_graph_lines(const std::string& in_path) {
    std::vector<std::string> lines;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!in_path.empty() && in_path != "-") {
        file.open(in_path);
        if (!file) throw std::runtime_error("cannot open input file: " + in_path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
}

struct ConstructArgs {
    std::string family;
    std::string recipe_path;
    std::string base_path;
    std::string out;
    int a = 2, b = 2;
    int n = 0, k = 0, r = 2;
    int u = -1, v = -1;
    std::vector<int> pendants, triangles;
    bool emit_recipe = false;
};

int run_construct(const ConstructArgs& args) {
    ConstructionSpec spec;
    Graph result;
    std::string family = args.family;
    bool have_spec = true;

    if (!args.recipe_path.empty()) {
        std::ifstream f(args.recipe_path);
        if (!f) throw std::runtime_error("cannot open recipe: " + args.recipe_path);
        json j;
        f >> j;
        spec = spec_from_json(j);
    } else if (family == "kn") {
        spec.kind = ConstructionSpec::Kind::kn;
        spec.n = args.n;
    } else if (family == "d" || family == "D") {
        spec.kind = ConstructionSpec::Kind::d;
        spec.a = args.a;
        spec.b = args.b;
    } else if (family == "h" || family == "H") {
        spec.kind = ConstructionSpec::Kind::h;
        spec.n = args.n;
        spec.k = args.k;
        spec.r = args.r;
    } else if (family == "m6") {
        spec.kind = ConstructionSpec::Kind::m6;
        spec.n = args.n;
    } else if (family == "snark") {
        spec.kind = ConstructionSpec::Kind::snark;
        spec.k = args.k;
    } else if (family == "good-base") {
        spec = good_base(args.r);
    } else if (family == "mrn") {
        if (args.base_path.empty()) throw std::runtime_error("mrn requires --base FILE (graph6)");
        auto lines = read_graph_lines(args.base_path);
        if (lines.empty()) throw std::runtime_error("base file is empty");
        Graph base = parse_graph6(lines[0]);
        result = m_rn(args.r, args.n, base);
        have_spec = false;
        family = "Mrn";
    } else if (family == "expand-vertex" || family == "expand-edge" || family == "attach") {
        if (args.base_path.empty())
            throw std::runtime_error(family + " requires --base FILE (graph6)");
        auto lines = read_graph_lines(args.base_path);
        if (lines.empty()) throw std::runtime_error("base file is empty");
        Graph base = parse_graph6(lines[0]);
        if (family == "expand-vertex")
            result = expand_vertex(base, args.v);
        else if (family == "expand-edge")
            result = expand_edge(base, args.u, args.v);
        else
            result = attach(base, args.pendants, args.triangles);
        have_spec = false;
    } else {
        throw std::runtime_error("unknown family '" + family +
                                 "' (try d, h, kn, m6, snark, mrn, good-base, expand-vertex, "
                                 "expand-edge, attach, or --recipe)");
    }

    if (have_spec) {
        if (args.emit_recipe) {
            write_output(args.out, spec_to_json(spec).dump(2) + "\n");
            return kExitOk;
        }
        result = build(spec);
        family = spec.family_name();
    }
    write_output(args.out, emit_graph6(result) + "\n");
    std::cerr << "n=" << result.order() << " m=" << result.size() << " family=" << family;
    if ((family == "D" && (args.a < 2 || args.b < 2)))
        std::cerr << " warning=saturation-for-threshold-6-needs-a,b>=2";
    std::cerr << "\n";
    return kExitOk;
}

int run_verify(const std::string& in_path, const std::string& out_path, int r,
               std::uint64_t budget, bool cross_check) {
    auto lines = read_graph_lines(in_path);
    if (lines.empty()) {
        std::cerr << "verify: no input graphs\n";
        return kExitUsage;
    }
    SaturationOptions opts;
    opts.limits.max_nodes = budget;
    opts.cross_check = cross_check;
    std::ostringstream out;
    bool all_saturated = true;
    for (const auto& line : lines) {
        Graph g = parse_graph6(line);
        SaturationCertificate cert = check_saturation(g, r, opts);
        json j = to_json(cert);
        j["graph6"] = emit_graph6(g);
        out << j.dump() << "\n";
        all_saturated = all_saturated && cert.saturated();
    }
    write_output(out_path, out.str());
    return all_saturated ? kExitOk : kExitNegative;
}

int run_sat_search(int n, int r, int max_edges, int jobs, bool extended,
                   const std::string& out_path) {
    if (n > 9 && !extended) {
        std::cerr << "sat-search: n > 9 requires --extended\n";
        return kExitUsage;
    }
    if (n == 9 && !extended)
        std::cerr << "note: n=9 runs may take a while; --extended lifts the default cap\n";
    OracleOptions opts;
    opts.jobs = jobs;
    if (max_edges <= 0) max_edges = n * (n - 1) / 2;
    SatResult res = sat_oracle(n, r, max_edges, opts);
    write_output(out_path, to_json(res).dump(2) + "\n");
    return res.found ? kExitOk : kExitNegative;
}

int run_analyze(const std::string& in_path, const std::string& out_path, int r,
                std::uint64_t budget) {
    auto lines = read_graph_lines(in_path);
    if (lines.empty()) {
        std::cerr << "analyze: no input graphs\n";
        return kExitUsage;
    }
    SaturationOptions opts;
    opts.limits.max_nodes = budget;
    opts.collect_witnesses = false;
    std::ostringstream out;
    for (const auto& line : lines) {
        Graph g = parse_graph6(line);
        if (!is_connected(g)) throw std::runtime_error("analyze: disconnected input graph");
        json j{{"schema_version", kSchemaVersion}, {"type", "analysis"}, {"r", r}};
        j["graph6"] = emit_graph6(g);
        j["graph"] = to_json(g);
        j["n"] = g.order();
        j["m"] = g.size();
        j["partition"] = to_json(structure_partition(g));
        SaturationCertificate cert = check_saturation(g, r, opts);
        j["verdict"] = to_json(cert)["verdict"];
        if (cert.saturated() && r >= 6) {
            j["structure_properties"] = to_json(check_structure_properties(g, r, cert));
            j["counting_inequalities"] = to_json(check_counting_inequalities(g, r, cert));
        }
        j["c6_characterization"] = c6_characterization(g);
        bool cubic = g.order() > 0;
        for (int v = 0; v < g.order() && cubic; ++v) cubic = g.degree(v) == 3;
        j["good_graph"] = {{"good", is_good_graph(g)},
                           {"three_regular", cubic},
                           {"almost_three_regular", is_almost_3_regular(g)},
                           {"barbell_free", !contains_barbell(g)}};
        out << j.dump() << "\n";
    }
    write_output(out_path, out.str());
    return kExitOk;
}

int run_bounds(const std::string& n_range, const std::string& r_range, int plot_g,
               const std::string& format, const std::string& out_path) {
    std::ostringstream out;
    if (plot_g > 0) {
        if (format == "csv") {
            out << "x,g\n";
            for (int i = 1; i <= plot_g; ++i) {
                Rational x(i, plot_g);
                out << x.str() << "," << g_value(x).str() << "\n";
            }
        } else {
            json samples = json::array();
            for (int i = 1; i <= plot_g; ++i) {
                Rational x(i, plot_g);
                samples.push_back({{"x", x.str()}, {"g", g_value(x).str()}});
            }
            json j{{"schema_version", kSchemaVersion}, {"type", "g_samples"},
                   {"samples", samples}};
            out << j.dump(2) << "\n";
        }
        write_output(out_path, out.str());
        return kExitOk;
    }

    auto parse_range = [](const std::string& s) -> std::pair<long long, long long> {
        auto colon = s.find(':');
        if (colon == std::string::npos) {
            long long v = std::stoll(s);
            return {v, v};
        }
        return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
    };
    auto [n_lo, n_hi] = parse_range(n_range);
    auto [r_lo, r_hi] = parse_range(r_range);
    if (n_lo > n_hi || r_lo > r_hi) throw std::runtime_error("bounds: empty range");

    if (format == "csv") {
        out << "n,r,lower,upper,exact,source\n";
        for (long long n = n_lo; n <= n_hi; ++n)
            for (long long r = std::max(3ll, r_lo); r <= std::min(r_hi, n); ++r) {
                SatBound b = sat_bounds(n, r);
                out << n << "," << r << "," << b.lower << ",";
                if (b.upper) out << *b.upper;
                out << ",";
                if (b.exact) out << *b.exact;
                out << ",\"" << (b.exact ? b.exact_source : b.lower_source + "; " + b.upper_source)
                    << "\"\n";
            }
    } else {
        json rows = json::array();
        for (long long n = n_lo; n <= n_hi; ++n)
            for (long long r = std::max(3ll, r_lo); r <= std::min(r_hi, n); ++r)
                rows.push_back(to_json(sat_bounds(n, r)));
        json j{{"schema_version", kSchemaVersion}, {"type", "bounds_table"}, {"rows", rows}};
        out << j.dump(2) << "\n";
    }
    write_output(out_path, out.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions, certification, and search for graphs saturated "
                 "with respect to long cycles"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "build a named family, print graph6");
    construct->add_option("--family", cargs.family, "family tag");
    construct->add_option("--recipe", cargs.recipe_path, "JSON recipe file");
    construct->add_option("--base", cargs.base_path, "graph6 file for base/input graph");
    construct->add_option("--a", cargs.a, "D: size of the first rim class");
    construct->add_option("--b", cargs.b, "D: size of the second rim class");
    construct->add_option("--n", cargs.n, "order parameter");
    construct->add_option("--k", cargs.k, "snark/H parameter");
    construct->add_option("--r", cargs.r, "H/mrn/good-base parameter");
    construct->add_option("--u", cargs.u, "expand-edge: first endpoint");
    construct->add_option("--v", cargs.v, "expansion vertex / second endpoint");
    construct->add_option("--pendants", cargs.pendants, "attach: pendant hosts");
    construct->add_option("--triangles", cargs.triangles, "attach: triangle hosts");
    construct->add_flag("--emit-recipe", cargs.emit_recipe, "print the JSON recipe instead");
    construct->add_option("--out", cargs.out, "output file (default stdout)");

    std::string in_path, out_path;
    int r = 6;
    std::uint64_t budget = UINT64_MAX;
    bool no_cross_check = false;
    auto* verify = app.add_subcommand("verify", "saturation certificate for graph6 input");
    verify->add_option("--in", in_path, "graph6 input file (default stdin)");
    verify->add_option("--out", out_path, "JSON output file (default stdout)");
    verify->add_option("--r", r, "cycle length threshold")->required();
    verify->add_option("--budget", budget, "search node budget");
    verify->add_flag("--no-cross-check", no_cross_check, "skip the add-edge cycle re-check");

    int sn = 0, sr = 0, max_edges = 0, jobs = 1;
    bool extended = false;
    std::string sout;
    auto* search = app.add_subcommand("sat-search", "exact minimum saturated size by enumeration");
    search->add_option("--n", sn, "vertex count")->required();
    search->add_option("--r", sr, "cycle length threshold")->required();
    search->add_option("--max-edges", max_edges, "stop after this edge count");
    search->add_option("--jobs", jobs, "parallel predicate workers");
    search->add_flag("--extended", extended, "allow long runs (n=9 and beyond)");
    search->add_option("--out", sout, "JSON output file (default stdout)");

    std::string ain, aout;
    int ar = 6;
    std::uint64_t abudget = UINT64_MAX;
    auto* analyze = app.add_subcommand("analyze", "partition/structure/goodness report");
    analyze->add_option("--in", ain, "graph6 input file (default stdin)");
    analyze->add_option("--out", aout, "JSON output file (default stdout)");
    analyze->add_option("--r", ar, "cycle length threshold");
    analyze->add_option("--budget", abudget, "search node budget");

    std::string n_range, r_range, bformat = "json", bout;
    int plot_g = 0;
    auto* bounds = app.add_subcommand("bounds", "closed-form bound table / g samples");
    bounds->add_option("--n-range", n_range, "n range lo:hi");
    bounds->add_option("--r-range", r_range, "r range lo:hi");
    bounds->add_option("--plot-g", plot_g, "emit this many exact samples of g");
    bounds->add_option("--format", bformat, "json|csv");
    bounds->add_option("--out", bout, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(cargs);
        if (verify->parsed()) return run_verify(in_path, out_path, r, budget, !no_cross_check);
        if (search->parsed()) return run_sat_search(sn, sr, max_edges, jobs, extended, sout);
        if (analyze->parsed()) return run_analyze(ain, aout, ar, abudget);
        if (bounds->parsed()) {
            if (plot_g <= 0 && (n_range.empty() || r_range.empty()))
                throw std::runtime_error("bounds: need --plot-g or both --n-range and --r-range");
            return run_bounds(n_range, r_range, plot_g, bformat, bout);
        }
    } catch (const ResourceExhausted& e) {
        std::cerr << "resource exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Graph6Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
