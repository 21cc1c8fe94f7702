// Batch front door: searches, transcript verification, brute-force oracles,
// lower-bound colorings, exact bound tables, and instance generation. Every
// run emits a JSON manifest (stderr by default, --manifest FILE otherwise)
// echoing the full configuration so artifacts can be reproduced exactly.

#include "ramsey/engine.hpp"
#include "ramsey/lowerbound.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace ramsey;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "1.0.0";

std::string now_iso() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Graph arguments accept either a generator spec (contains ':') or a path to
// an edge-list file.
EdgeListGraph load_graph(const std::string& arg) {
    if (arg.find(':') != std::string::npos) return make_graph(arg);
    return parse_edge_list_text(read_file(arg));
}

// Advisory decimal, truncated to three places; display only.
std::string decimal3(const Rational& r) { return r.to_decimal_string(3); }

struct Manifest {
    json j;
    std::string path;  // empty: single line on stderr

    Manifest(const std::string& subcommand, int argc, char** argv) {
        j["tool"] = "ramsey";
        j["version"] = kToolVersion;
        j["subcommand"] = subcommand;
        j["argv"] = std::vector<std::string>(argv, argv + argc);
        j["started"] = now_iso();
    }

    void emit() {
        j["finished"] = now_iso();
        if (path.empty()) {
            std::cerr << j.dump() << "\n";
        } else {
            write_file(path, j.dump(2) + "\n");
        }
    }
};

json config_json(const SearchConfig& cfg) { return json::parse(cfg.header_line()).at("config"); }

json stats_json(const SearchStats& s) {
    return json{{"nodes", s.nodes},
                {"red_leaves", s.red_leaves},
                {"blue_leaves", s.blue_leaves},
                {"max_leaf_depth", s.max_leaf_depth},
                {"deepest_endpoint", s.deepest_endpoint}};
}

int cmd_search(const SearchConfig& cfg, const SearchOptions& opts, const std::string& out_path,
               long long path_n, Manifest& manifest) {
    manifest.j["config"] = config_json(cfg);
    manifest.j["jobs"] = opts.jobs;
    manifest.j["split_depth"] = opts.split_depth;

    SearchOutcome out = segment_search(cfg, opts);
    manifest.j["stats"] = stats_json(out.stats);

    if (out.status == SearchStatus::Success) {
        std::cout << "SUCCESS: every admitted coloring closes by endpoint "
                  << out.stats.deepest_endpoint << "\n";
        std::cout << "nodes=" << out.stats.nodes << " red_leaves=" << out.stats.red_leaves
                  << " blue_leaves=" << out.stats.blue_leaves
                  << " transcript_bytes=" << out.transcript.size() << "\n";
        if (!out_path.empty()) {
            write_file(out_path, out.transcript);
            std::cout << "transcript written to " << out_path << "\n";
            manifest.j["artifacts"]["transcript"] = out_path;
        }
        if (path_n > 0) {
            BoundReport r = theorem_assemble(cfg, out, path_n);
            std::cout << "bound: density " << r.density.to_string() << ", window " << r.window
                      << ", coefficient " << r.coefficient.to_string() << " ("
                      << decimal3(r.coefficient) << "), host vertices >= " << r.min_n_host
                      << ", host edges " << r.edge_bound << "\n";
            manifest.j["bound"] = {{"density", r.density.to_string()},
                                   {"window", r.window},
                                   {"n", r.n},
                                   {"min_n_host", r.min_n_host},
                                   {"edge_bound", r.edge_bound},
                                   {"coefficient", r.coefficient.to_string()}};
        }
        manifest.j["outcome"] = "success";
        return 0;
    }
    if (out.status == SearchStatus::Failure) {
        std::string cex = counterexample_file(cfg, out.counterexample);
        std::cout << "FAILURE: open coloring at full depth:";
        for (const UpString& u : out.counterexample) std::cout << " " << u.to_string();
        std::cout << "\n";
        if (!out_path.empty()) {
            write_file(out_path, cex);
            std::cout << "counterexample written to " << out_path << "\n";
            manifest.j["artifacts"]["counterexample"] = out_path;
        }
        manifest.j["outcome"] = "failure";
        return 10;
    }
    std::cout << "BUDGET EXHAUSTED: no verdict (nodes=" << out.stats.nodes << ")\n";
    manifest.j["outcome"] = "budget-exhausted";
    return 20;
}

int cmd_verify(const std::string& path, bool as_json, Manifest& manifest) {
    VerificationReport rep = verify_file(path);
    const char* verdict = rep.verdict == Verdict::Valid     ? "VALID"
                          : rep.verdict == Verdict::Invalid ? "INVALID"
                                                            : "PARSE ERROR";
    json out{{"verdict", verdict},
             {"counterexample_mode", rep.counterexample_mode},
             {"line", rep.line},
             {"message", rep.message},
             {"stats",
              {{"branches", rep.stats.branches},
               {"red_leaves", rep.stats.red_leaves},
               {"blue_leaves", rep.stats.blue_leaves},
               {"pops", rep.stats.pops},
               {"max_depth_seen", rep.stats.max_depth_seen},
               {"max_blue_endpoint", rep.stats.max_blue_endpoint}}}};
    if (rep.verdict != Verdict::ParseError) out["config"] = config_json(rep.config);
    if (as_json) {
        std::cout << out.dump() << "\n";
    } else if (rep.verdict == Verdict::Valid) {
        std::cout << "VALID: " << rep.stats.branches << " branches, " << rep.stats.red_leaves
                  << " red leaves, " << rep.stats.blue_leaves << " blue leaves"
                  << (rep.counterexample_mode ? " (counterexample mode)" : "") << "\n";
    } else {
        std::cout << verdict << " at line " << rep.line << ": " << rep.message << "\n";
    }
    manifest.j["report"] = out;
    manifest.j["outcome"] = verdict;
    if (rep.verdict == Verdict::Valid) return 0;
    return rep.verdict == Verdict::ParseError ? 3 : 1;
}

int cmd_bounds(Manifest& manifest) {
    struct UpperRow {
        Rational density;
        int cycle_cap;
        const char* note;
    };
    const UpperRow upper[] = {
        {Rational(1, 3), 5, ""},
        {Rational(4, 7), 5, ""},
        {Rational(3, 4), 8, ""},
        {Rational(19, 25), 8, ""},
        {Rational(7, 9), 8, "  (best possible for this host; not provable by segments)"},
    };
    json rows = json::array();
    std::cout << "host edge coefficients by proven blue density (third power of a path):\n";
    for (const UpperRow& row : upper) {
        Rational coeff = Rational(3) / row.density;
        const char* rel = *row.note ? "~" : "<";
        std::cout << "  " << row.density.to_string() << " -> " << coeff.to_string() << " " << rel
                  << " " << decimal3(coeff) << "  [cycles <= " << row.cycle_cap << "]" << row.note
                  << "\n";
        rows.push_back({{"density", row.density.to_string()},
                        {"coefficient", coeff.to_string()},
                        {"decimal", decimal3(coeff)},
                        {"cycle_cap", row.cycle_cap}});
    }
    manifest.j["upper"] = rows;

    json lrows = json::array();
    std::cout << "lower-bound thresholds by degree cutoff (edges > (2 + threshold) n):\n";
    for (int d = 4; d <= 12; ++d) {
        Rational th = density_threshold(d);
        Rational total = Rational(2) + th;
        const char* mark = d == 5 ? "  (max)" : "";
        std::cout << "  d=" << d << " -> 2 + " << th.to_string() << " > " << decimal3(total)
                  << mark << "\n";
        lrows.push_back(
            {{"d", d}, {"threshold", th.to_string()}, {"decimal", decimal3(total)}});
    }
    manifest.j["lower"] = lrows;
    manifest.j["outcome"] = "printed";
    return 0;
}

int cmd_oracle_arrow(const std::string& graph_arg, std::optional<int> cap, int n_path,
                     int edge_cap, const std::string& out_path, Manifest& manifest) {
    SmallGraph g(load_graph(graph_arg));
    ArrowResult r = arrow_check(g, cap, n_path, edge_cap);
    std::cout << "arrows=" << (r.arrows ? "true" : "false") << " family="
              << (cap ? "cycles<=" + std::to_string(*cap) : "all-cycles")
              << " path_order=" << n_path << " red_sets_checked=" << r.red_sets_checked << "\n";
    json art{{"arrows", r.arrows},
             {"path_order", n_path},
             {"red_sets_checked", r.red_sets_checked}};
    if (cap) art["cycle_cap"] = *cap;
    if (!r.arrows) {
        json w = json::array();
        for (auto [u, v] : r.witness) w.push_back({u, v});
        art["witness"] = w;
        art["witness_blue_longest"] = r.witness_blue_longest;
        std::cout << "witness red set (" << r.witness.size()
                  << " edges) leaves blue longest path " << r.witness_blue_longest << "\n";
    }
    if (!out_path.empty()) {
        write_file(out_path, art.dump() + "\n");
        manifest.j["artifacts"]["result"] = out_path;
    }
    manifest.j["result"] = art;
    manifest.j["outcome"] = r.arrows ? "arrows" : "refuted";
    return 0;
}

int cmd_oracle_longest(const std::string& graph_arg, const LongestPathOptions& opts,
                       Manifest& manifest) {
    SmallGraph g(load_graph(graph_arg));
    int lp = longest_path_exact(g, opts);
    std::cout << "longest_path_order=" << lp << " n=" << g.n() << " m=" << g.edge_count() << "\n";
    manifest.j["result"] = {{"longest_path_order", lp}, {"n", g.n()}, {"m", g.edge_count()}};
    manifest.j["outcome"] = "computed";
    return 0;
}

int cmd_oracle_window(const SearchConfig& cfg, int window, int jobs, int max_window,
                      Manifest& manifest) {
    manifest.j["config"] = config_json(cfg);
    manifest.j["window"] = window;
    LemmaVerdict v = lemma_oracle(cfg, window, jobs, max_window);
    if (v.holds) {
        std::cout << "HOLDS: all " << v.colorings << " colorings close (" << v.open_checked
                  << " open after the red filter)\n";
        manifest.j["outcome"] = "holds";
        manifest.j["colorings"] = v.colorings;
        manifest.j["open_checked"] = v.open_checked;
        return 0;
    }
    std::cout << "REFUTED: open coloring";
    json cex = json::array();
    for (const UpString& u : v.counterexample) {
        std::cout << " " << u.to_string();
        cex.push_back(u.to_string());
    }
    std::cout << "\n";
    manifest.j["outcome"] = "refuted";
    manifest.j["counterexample"] = cex;
    return 10;
}

int cmd_lowerbound_color(const std::string& graph_arg, int d, const std::string& out_path,
                         long long path_n, Manifest& manifest) {
    EdgeListGraph g = load_graph(graph_arg);
    AdversaryColoring c = adversary_coloring(g, d);
    std::cout << "red=" << c.red.size() << " blue=" << c.blue.size() << " |B|=" << c.b.size()
              << " |A0|=" << c.a0.size() << " |A1|=" << c.a1.size() << " |X|=" << c.x_size
              << "\n";
    std::cout << "blue path order <= " << c.blue_path_bound.to_string() << " ("
              << decimal3(c.blue_path_bound) << "), +-" << AdversaryColoring::count_slack
              << " reduction slack reported separately\n";
    json art = json::parse(export_adversary_coloring(c));
    if (!out_path.empty()) {
        write_file(out_path, art.dump() + "\n");
        manifest.j["artifacts"]["coloring"] = out_path;
    }
    manifest.j["summary"] = {{"n", c.n},
                             {"red", c.red.size()},
                             {"blue", c.blue.size()},
                             {"B", c.b.size()},
                             {"A0", c.a0.size()},
                             {"A1", c.a1.size()},
                             {"X", c.x_size},
                             {"blue_path_bound", c.blue_path_bound.to_string()},
                             {"count_slack", AdversaryColoring::count_slack}};
    if (path_n > 0) {
        // Sanity report only: counterexample graphs to arrowing must satisfy
        // |X| >= 2n - N; generated instances need not.
        long long floor_x = 2 * path_n - g.n;
        manifest.j["summary"]["x_floor_for_path_n"] = floor_x;
        std::cout << "|X|=" << c.x_size << " vs counterexample floor 2n-N=" << floor_x << "\n";
    }
    manifest.j["outcome"] = "colored";
    return 0;
}

int cmd_lowerbound_forest(const std::string& graph_arg, int delta, const std::string& out_path,
                          Manifest& manifest) {
    EdgeListGraph g = load_graph(graph_arg);
    ForestDecomposition fd = greedy_forest(g, delta);
    std::string err = forest_decomposition_error(g, delta, fd);
    if (!err.empty()) {
        std::cerr << "internal error: decomposition failed its audit: " << err << "\n";
        manifest.j["outcome"] = "audit-failed";
        return 1;
    }
    Rational weight(2 * static_cast<long long>(fd.a0.size()) +
                        static_cast<long long>(fd.a1.size()),
                    2);
    std::cout << "|A0|=" << fd.a0.size() << " |A1|=" << fd.a1.size() << " |X|=" << fd.x.size()
              << " |Y|=" << fd.y.size() << " forest_edges=" << fd.forest.size() << "\n";
    std::cout << "weight " << weight.to_string() << " >= gamma(" << delta << ") * n = "
              << (gamma_coefficient(delta) * Rational(g.n)).to_string() << "\n";
    json art;
    json fedges = json::array();
    for (auto [u, v] : fd.forest) fedges.push_back({u, v});
    art["forest"] = fedges;
    art["A0"] = fd.a0;
    art["A1"] = fd.a1;
    art["X"] = fd.x;
    art["Y"] = fd.y;
    if (!out_path.empty()) {
        write_file(out_path, art.dump() + "\n");
        manifest.j["artifacts"]["decomposition"] = out_path;
    }
    manifest.j["summary"] = {{"A0", fd.a0.size()},
                             {"A1", fd.a1.size()},
                             {"X", fd.x.size()},
                             {"Y", fd.y.size()},
                             {"forest_edges", fd.forest.size()},
                             {"weight", weight.to_string()}};
    manifest.j["outcome"] = "decomposed";
    return 0;
}

int cmd_gen(const std::string& spec, const std::string& out_path, Manifest& manifest) {
    EdgeListGraph g = make_graph(spec);
    std::string text = format_edge_list(g);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
        std::cout << "n=" << g.n << " m=" << g.m() << " written to " << out_path << "\n";
        manifest.j["artifacts"]["graph"] = out_path;
    }
    manifest.j["summary"] = {{"n", g.n}, {"m", g.m()}};
    manifest.j["outcome"] = "generated";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact size-Ramsey toolkit: certificate-producing search, streaming verification, "
                 "brute-force oracles, and lower-bound constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string manifest_path;
    app.add_option("--manifest", manifest_path,
                   "write the run manifest to this file (default: one JSON line on stderr)");

    // search ---------------------------------------------------------------
    auto* search = app.add_subcommand("search", "run the segment search and emit a transcript");
    int s_cap = 5, s_maxd = 9, s_power = 3, s_jobs = 1, s_split = 2;
    std::string s_target = "4/7", s_start = "has-blue", s_end = "has-blue", s_out, s_ckpt;
    long long s_max_nodes = -1, s_path_n = 0;
    double s_max_seconds = -1.0;
    bool s_resume = false;
    search->add_option("--cycle-cap", s_cap, "forbid red cycles of length <= this")->required();
    search->add_option("--target", s_target, "blue density target p/q")->required();
    search->add_option("--start-pred", s_start, "endpoint predicate at vertex 0");
    search->add_option("--end-pred", s_end, "endpoint predicate at the far endpoint");
    search->add_option("--max-depth", s_maxd, "deepest endpoint considered")->required();
    search->add_option("--power", s_power, "path power of the host graph");
    search->add_option("--out", s_out, "transcript (or counterexample) output file");
    search->add_option("--jobs", s_jobs, "worker threads")->envname("RAMSEY_JOBS");
    search->add_option("--split-depth", s_split, "depth of parallel task roots");
    search->add_option("--checkpoint", s_ckpt, "checkpoint spool directory");
    search->add_flag("--resume", s_resume, "reuse completed chunks from the spool");
    search->add_option("--max-nodes", s_max_nodes, "node budget (<0: unlimited)");
    search->add_option("--max-seconds", s_max_seconds, "time budget (<0: unlimited)");
    search->add_option("--path-n", s_path_n, "also print the host bound for a blue path of this order");

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a transcript or counterexample file");
    std::string v_path;
    bool v_json = false;
    verify->add_option("--transcript", v_path, "transcript file")->required();
    verify->add_flag("--json", v_json, "machine-readable report");

    // bounds ---------------------------------------------------------------
    app.add_subcommand("bounds", "print the exact coefficient and threshold tables");

    // oracle ---------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth at desk scale");
    oracle->require_subcommand(1);
    auto* arrow = oracle->add_subcommand("arrow", "exhaust red sets of a small graph");
    std::string a_graph;
    int a_n = 3, a_edge_cap = 30, a_cap_val = 0;
    arrow->add_option("--graph", a_graph, "generator spec (family:args) or edge-list file")
        ->required();
    arrow->add_option("--n", a_n, "blue path order to force")->required();
    auto* a_cap_opt =
        arrow->add_option("--cycle-cap", a_cap_val, "short-cycle family (omit: all cycles)");
    arrow->add_option("--edge-cap", a_edge_cap, "red-set enumeration guard");
    std::string a_out;
    arrow->add_option("--out", a_out, "result artifact file (JSON)");

    auto* longest = oracle->add_subcommand("longest-path", "exact longest path order");
    std::string l_graph;
    LongestPathOptions l_opts;
    longest->add_option("--graph", l_graph, "generator spec or edge-list file")->required();
    longest->add_option("--jobs", l_opts.jobs, "layered DP threads")->envname("RAMSEY_JOBS");
    longest->add_option("--dp-cap", l_opts.dp_cap, "largest n for the subset DP");
    longest->add_option("--hard-cap", l_opts.hard_cap, "refuse graphs larger than this");
    longest->add_option("--bb-seconds", l_opts.bb_seconds, "branch-and-bound time budget");

    auto* window = oracle->add_subcommand("window", "exhaust every coloring of a fixed window");
    int w_cap = 5, w_maxd = 4, w_power = 3, w_window = 5, w_jobs = 1, w_max_window = 7;
    std::string w_target = "1/3", w_start = "not-rrr", w_end = "not-rrr";
    window->add_option("--cycle-cap", w_cap, "forbid red cycles of length <= this")->required();
    window->add_option("--target", w_target, "blue density target p/q")->required();
    window->add_option("--start-pred", w_start, "endpoint predicate at vertex 0");
    window->add_option("--end-pred", w_end, "endpoint predicate at the far endpoint");
    window->add_option("--max-depth", w_maxd, "deepest endpoint considered")->required();
    window->add_option("--power", w_power, "path power of the host graph");
    window->add_option("--window", w_window, "number of up-strings to enumerate")->required();
    window->add_option("--jobs", w_jobs, "worker threads")->envname("RAMSEY_JOBS");
    window->add_option("--max-window", w_max_window, "enumeration budget guard");

    // lowerbound -----------------------------------------------------------
    auto* lower = app.add_subcommand("lowerbound", "forest decompositions and adversary colorings");
    lower->require_subcommand(1);
    auto* color = lower->add_subcommand("color", "red-acyclic adversary coloring");
    std::string c_graph, c_out;
    int c_d = 5;
    long long c_path_n = 0;
    color->add_option("--graph", c_graph, "generator spec or edge-list file")->required();
    color->add_option("--d", c_d, "degree cutoff for the high-degree set B");
    color->add_option("--out", c_out, "coloring artifact file (JSON)");
    color->add_option("--path-n", c_path_n, "report the |X| sanity floor for this path order");

    auto* forest = lower->add_subcommand("forest", "two-phase greedy forest decomposition");
    std::string f_graph, f_out;
    int f_delta = 5;
    forest->add_option("--graph", f_graph, "generator spec or edge-list file")->required();
    forest->add_option("--delta", f_delta, "max degree bound fed to gamma")->required();
    forest->add_option("--out", f_out, "decomposition artifact file (JSON)");

    // gen --------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "write a named-family or random instance");
    std::string g_spec, g_out;
    gen->add_option("spec", g_spec, "path_power:N:p | complete:N | random_mindeg3:N:M:SEED")
        ->required();
    gen->add_option("--out", g_out, "edge-list output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    Manifest manifest(sub->get_name(), argc, argv);
    manifest.path = manifest_path;
    try {
        int rc = 2;
        if (sub == search) {
            SearchConfig cfg;
            cfg.cycle_cap = s_cap;
            cfg.target = Rational::parse(s_target);
            cfg.start_pred = EndpointPredicate::parse(s_start);
            cfg.end_pred = EndpointPredicate::parse(s_end);
            cfg.max_depth = s_maxd;
            cfg.power = s_power;
            cfg.validate();
            SearchOptions opts;
            opts.jobs = s_jobs;
            opts.split_depth = s_split;
            opts.budget.max_nodes = s_max_nodes;
            opts.budget.max_seconds = s_max_seconds;
            opts.checkpoint_dir = s_ckpt;
            opts.resume = s_resume;
            rc = cmd_search(cfg, opts, s_out, s_path_n, manifest);
        } else if (sub == verify) {
            rc = cmd_verify(v_path, v_json, manifest);
        } else if (sub->get_name() == "bounds") {
            rc = cmd_bounds(manifest);
        } else if (sub == oracle) {
            CLI::App* osub = oracle->get_subcommands().front();
            if (osub == arrow) {
                std::optional<int> cap;
                if (a_cap_opt->count() > 0) cap = a_cap_val;
                rc = cmd_oracle_arrow(a_graph, cap, a_n, a_edge_cap, a_out, manifest);
            } else if (osub == longest) {
                rc = cmd_oracle_longest(l_graph, l_opts, manifest);
            } else {
                SearchConfig cfg;
                cfg.cycle_cap = w_cap;
                cfg.target = Rational::parse(w_target);
                cfg.start_pred = EndpointPredicate::parse(w_start);
                cfg.end_pred = EndpointPredicate::parse(w_end);
                cfg.max_depth = w_maxd;
                cfg.power = w_power;
                cfg.validate();
                rc = cmd_oracle_window(cfg, w_window, w_jobs, w_max_window, manifest);
            }
        } else if (sub == lower) {
            CLI::App* lsub = lower->get_subcommands().front();
            if (lsub == color) {
                rc = cmd_lowerbound_color(c_graph, c_d, c_out, c_path_n, manifest);
            } else {
                rc = cmd_lowerbound_forest(f_graph, f_delta, f_out, manifest);
            }
        } else if (sub == gen) {
            rc = cmd_gen(g_spec, g_out, manifest);
        }
        manifest.emit();
        return rc;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        manifest.j["outcome"] = "usage-error";
        manifest.j["error"] = e.what();
        manifest.emit();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        manifest.j["outcome"] = "error";
        manifest.j["error"] = e.what();
        manifest.emit();
        return 2;
    }
}
