#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/certificates.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/search_config.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace ramsey;

namespace {

SearchConfig lemma22() {
    SearchConfig cfg;
    cfg.cycle_cap = 5;
    cfg.target = Rational(4, 7);
    cfg.start_pred = EndpointPredicate::has_blue();
    cfg.end_pred = EndpointPredicate::has_blue();
    cfg.max_depth = 9;
    cfg.power = 3;
    return cfg;
}

SearchConfig warmup(int max_depth = 7) {
    SearchConfig cfg;
    cfg.cycle_cap = 5;
    cfg.target = Rational(1, 3);
    cfg.start_pred = EndpointPredicate::parse("not-rrr");
    cfg.end_pred = EndpointPredicate::parse("not-rrr");
    cfg.max_depth = max_depth;
    cfg.power = 3;
    return cfg;
}

std::vector<UpString> ups(std::initializer_list<const char*> ss) {
    std::vector<UpString> out;
    for (const char* s : ss) out.push_back(UpString::parse(s));
    return out;
}

UpColoring coloring(const SearchConfig& cfg, const std::vector<UpString>& us) {
    return UpColoring(PowerPathGraph(cfg.n_vertices(), cfg.power), us);
}

// Structural walk of a transcript: header first, every pop consistent with
// the running depth, every leaf attached to the branch just taken, final
// depth zero. Counts lines by kind. Certificate semantics are the verifier
// module's job; this guards the writer's grammar.
struct TranscriptShape {
    long long branches = 0, red_leaves = 0, blue_leaves = 0;
    int max_depth_seen = 0;
};

TranscriptShape walk_transcript(const std::string& bytes, const SearchConfig& cfg) {
    std::istringstream in(bytes);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == cfg.header_line());
    CHECK(SearchConfig::from_header_line(line) == cfg);

    TranscriptShape shape;
    int depth = 0;
    bool last_was_branch = false;
    while (std::getline(in, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        if (j.contains("branch")) {
            ++depth;
            ++shape.branches;
            shape.max_depth_seen = std::max(shape.max_depth_seen, depth);
            CHECK(depth <= cfg.max_depth + 1);
            last_was_branch = true;
        } else if (j.contains("leaf")) {
            REQUIRE(last_was_branch);
            if (j["leaf"].contains("red_cycle")) {
                ++shape.red_leaves;
            } else {
                REQUIRE(j["leaf"].contains("blue_path"));
                ++shape.blue_leaves;
            }
            last_was_branch = false;
        } else {
            REQUIRE(j.contains("pop"));
            int m = j["pop"].get<int>();
            REQUIRE(m >= 1);
            REQUIRE(m <= depth);
            depth -= m;
            last_was_branch = false;
        }
    }
    CHECK(depth == 0);
    return shape;
}

}  // namespace

TEST_CASE("config header line round-trips and rejects bad input") {
    SearchConfig cfg = lemma22();
    std::string h = cfg.header_line();
    CHECK(SearchConfig::from_header_line(h) == cfg);

    SearchConfig w = warmup();
    CHECK(SearchConfig::from_header_line(w.header_line()) == w);

    CHECK_THROWS_AS(SearchConfig::from_header_line("{\"bogus\":1}"), std::runtime_error);
    CHECK_THROWS_AS(SearchConfig::from_header_line("not json"), std::runtime_error);
    std::string v2 = h;
    auto pos = v2.find("\"format_version\":1");
    REQUIRE(pos != std::string::npos);
    v2.replace(pos, 18, "\"format_version\":2");
    CHECK_THROWS_AS(SearchConfig::from_header_line(v2), std::runtime_error);
}

TEST_CASE("find_closing_certificate basic cases") {
    SearchConfig cfg = lemma22();

    // Too shallow: nothing beyond vertex 0 is determined.
    auto none = find_closing_certificate(coloring(cfg, ups({"RRB"})), cfg);
    CHECK(std::holds_alternative<std::monostate>(none));

    // Red C4 from BRR,RRR: edges 02,03,12,13 all red.
    auto red = find_closing_certificate(coloring(cfg, ups({"BRR", "RRR"})), cfg);
    REQUIRE(std::holds_alternative<RedCycleCert>(red));
    CHECK(std::get<RedCycleCert>(red).vertices == std::vector<int>{0, 2, 1, 3});

    // Blue edge 01 with nothing else closable: density-1 path [0,1].
    auto blue = find_closing_certificate(coloring(cfg, ups({"BRR", "BRR"})), cfg);
    REQUIRE(std::holds_alternative<BluePathCert>(blue));
    CHECK(std::get<BluePathCert>(blue).vertices == std::vector<int>{0, 1});
    CHECK(std::get<BluePathCert>(blue).density == Rational(1));

    // Largest endpoint preferred: all-blue prefix offers j=2 over j=1
    // (up(2) must be assigned for the endpoint predicate to see it).
    auto far = find_closing_certificate(coloring(cfg, ups({"BBB", "BBB", "BBB"})), cfg);
    REQUIRE(std::holds_alternative<BluePathCert>(far));
    CHECK(std::get<BluePathCert>(far).vertices == std::vector<int>{0, 1, 2});

    // Red preferred over blue when both close.
    auto both = find_closing_certificate(coloring(cfg, ups({"BRR", "RRB"})), cfg);
    CHECK(std::holds_alternative<RedCycleCert>(both));
}

TEST_CASE("serial search proves the 4/7 segment lemma") {
    SearchConfig cfg = lemma22();
    SearchOutcome out = segment_search_serial(cfg);
    REQUIRE(out.status == SearchStatus::Success);
    CHECK(out.stats.nodes > 100);
    CHECK(out.stats.red_leaves > 0);
    CHECK(out.stats.blue_leaves > 0);
    CHECK(out.stats.deepest_endpoint <= cfg.max_depth);

    TranscriptShape shape = walk_transcript(out.transcript, cfg);
    CHECK(shape.branches == out.stats.nodes);
    CHECK(shape.red_leaves == out.stats.red_leaves);
    CHECK(shape.blue_leaves == out.stats.blue_leaves);
    CHECK(shape.max_depth_seen == out.stats.max_leaf_depth + 1);
}

TEST_CASE("warm-up 1/3 lemma closes by endpoint 4") {
    SearchConfig cfg = warmup(7);
    SearchOutcome out = segment_search_serial(cfg);
    REQUIRE(out.status == SearchStatus::Success);
    CHECK(out.stats.deepest_endpoint <= 4);
    CHECK(out.stats.max_leaf_depth <= 4);

    // Same verdict at the tighter window it actually uses.
    SearchOutcome tight = segment_search_serial(warmup(4));
    CHECK(tight.status == SearchStatus::Success);
}

TEST_CASE("task pipeline reproduces the serial bytes for any jobs and split") {
    for (const SearchConfig& cfg : {lemma22(), warmup(7)}) {
        SearchOutcome ref = segment_search_serial(cfg);
        REQUIRE(ref.status == SearchStatus::Success);
        for (int split : {1, 2, 3}) {
            for (int jobs : {1, 4}) {
                SearchOptions opts;
                opts.jobs = jobs;
                opts.split_depth = split;
                SearchOutcome got = segment_search(cfg, opts);
                REQUIRE(got.status == SearchStatus::Success);
                CHECK(got.transcript == ref.transcript);
                CHECK(got.stats.nodes == ref.stats.nodes);
                CHECK(got.stats.red_leaves == ref.stats.red_leaves);
                CHECK(got.stats.blue_leaves == ref.stats.blue_leaves);
                CHECK(got.stats.deepest_endpoint == ref.stats.deepest_endpoint);
            }
        }
    }
}

TEST_CASE("density-1 target fails with a replayable counterexample") {
    SearchConfig cfg = lemma22();
    cfg.target = Rational(1);
    SearchOutcome out = segment_search_serial(cfg);
    REQUIRE(out.status == SearchStatus::Failure);
    REQUIRE(static_cast<int>(out.counterexample.size()) == cfg.max_depth + 1);
    CHECK(replay_counterexample(cfg, out.counterexample));
    CHECK(cfg.start_pred.matches(out.counterexample.front()));
    auto cert = find_closing_certificate(coloring(cfg, out.counterexample), cfg);
    CHECK(std::holds_alternative<std::monostate>(cert));

    // The pipeline reports the DFS-first counterexample too.
    SearchOptions opts;
    opts.jobs = 4;
    opts.split_depth = 2;
    SearchOutcome par = segment_search(cfg, opts);
    REQUIRE(par.status == SearchStatus::Failure);
    CHECK(par.counterexample == out.counterexample);

    std::string file = counterexample_file(cfg, out.counterexample);
    CHECK(file.rfind(cfg.header_line() + "\n{\"counterexample\":[\"", 0) == 0);
    CHECK(file.back() == '\n');
}

TEST_CASE("budget exhaustion is reported distinctly") {
    SearchConfig cfg = lemma22();
    SearchBudget tiny;
    tiny.max_nodes = 50;
    SearchOutcome out = segment_search_serial(cfg, tiny);
    CHECK(out.status == SearchStatus::Budget);
    CHECK(out.transcript.empty());
    CHECK(out.counterexample.empty());

    SearchOptions opts;
    opts.jobs = 2;
    opts.budget.max_nodes = 50;
    SearchOutcome par = segment_search(cfg, opts);
    CHECK(par.status == SearchStatus::Budget);
}

TEST_CASE("cycle-cap monotonicity: success persists as the cap grows") {
    SearchConfig cfg = warmup(7);
    for (int cap = 5; cap <= 8; ++cap) {
        cfg.cycle_cap = cap;
        CHECK(segment_search_serial(cfg).status == SearchStatus::Success);
    }
}

TEST_CASE("checkpointed run resumes to identical bytes") {
    namespace fs = std::filesystem;
    SearchConfig cfg = lemma22();
    SearchOutcome ref = segment_search_serial(cfg);

    fs::path dir = fs::temp_directory_path() / "ramsey_ckpt_test";
    fs::remove_all(dir);

    // First run: cut off early by a node budget, leaving partial chunks.
    SearchOptions first;
    first.jobs = 2;
    first.checkpoint_dir = dir.string();
    first.budget.max_nodes = ref.stats.nodes / 3;
    SearchOutcome cut = segment_search(cfg, first);
    CHECK(cut.status == SearchStatus::Budget);
    CHECK(fs::exists(dir / "manifest.json"));

    // Resume without a budget: completes and matches the reference bytes.
    SearchOptions second;
    second.jobs = 2;
    second.checkpoint_dir = dir.string();
    second.resume = true;
    SearchOutcome done = segment_search(cfg, second);
    REQUIRE(done.status == SearchStatus::Success);
    CHECK(done.transcript == ref.transcript);
    CHECK(done.stats.nodes == ref.stats.nodes);

    // A mismatched config must refuse to reuse the spool.
    SearchConfig other = lemma22();
    other.cycle_cap = 6;
    SearchOptions bad;
    bad.checkpoint_dir = dir.string();
    bad.resume = true;
    CHECK_THROWS_AS(segment_search(other, bad), std::runtime_error);

    fs::remove_all(dir);
}

TEST_CASE("bound assembly reproduces the published coefficients") {
    SearchConfig cfg = lemma22();
    SearchOutcome out = segment_search_serial(cfg);
    REQUIRE(out.status == SearchStatus::Success);

    BoundReport r = theorem_assemble(cfg, out, 100);
    CHECK(r.window == 11);
    CHECK(r.coefficient == Rational(21, 4));
    // Least N with (4/7)(N-11)+1 >= 100.
    CHECK(r.min_n_host == 185);
    CHECK(Rational(4, 7) * Rational(r.min_n_host - 11) + Rational(1) >= Rational(100));
    CHECK(!(Rational(4, 7) * Rational(r.min_n_host - 1 - 11) + Rational(1) >= Rational(100)));
    CHECK(r.edge_bound == 3 * r.min_n_host - 6);

    for (auto [num, den, cnum, cden] : {std::array<long long, 4>{1, 3, 9, 1},
                                        {4, 7, 21, 4},
                                        {3, 4, 4, 1},
                                        {19, 25, 75, 19},
                                        {7, 9, 27, 7}}) {
        SearchConfig c = cfg;
        c.target = Rational(num, den);
        CHECK(Rational(c.power) / c.target == Rational(cnum, cden));
    }

    SearchOutcome failed;
    failed.status = SearchStatus::Failure;
    CHECK_THROWS_AS(theorem_assemble(cfg, failed, 100), std::invalid_argument);
    CHECK_THROWS_AS(theorem_assemble(cfg, out, 1), std::invalid_argument);
}
