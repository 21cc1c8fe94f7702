#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/certificates.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/graphio.hpp"
#include "ramsey/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace ramsey;

namespace {

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

SearchConfig lemma22(int max_depth = 9) {
    SearchConfig cfg;
    cfg.cycle_cap = 5;
    cfg.target = Rational(4, 7);
    cfg.start_pred = EndpointPredicate::has_blue();
    cfg.end_pred = EndpointPredicate::has_blue();
    cfg.max_depth = max_depth;
    cfg.power = 3;
    return cfg;
}

UpColoring coloring(const SearchConfig& cfg, const std::vector<UpString>& us) {
    return UpColoring(PowerPathGraph(cfg.n_vertices(), cfg.power), us);
}

std::vector<UpString> ups_of_index(long long idx, int window, int p) {
    std::vector<UpString> out(window);
    for (int v = 0; v < window; ++v) {
        out[v] = UpString(static_cast<unsigned>((idx >> (p * (window - 1 - v))) & ((1 << p) - 1)), p);
    }
    return out;
}

long long index_of_ups(const std::vector<UpString>& us, int p) {
    long long idx = 0;
    for (const UpString& u : us) idx = (idx << p) | u.index();
    return idx;
}

// Unpruned DFS over simple paths; the independent baseline for the DP.
int brute_longest_path(const SmallGraph& g) {
    int best = g.n() > 0 ? 1 : 0;
    std::function<void(int, std::uint32_t, int)> go = [&](int v, std::uint32_t vis, int len) {
        best = std::max(best, len);
        std::uint32_t ext = g.neighbors(v) & ~vis;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            go(u, vis | (1u << u), len + 1);
        }
    };
    for (int v = 0; v < g.n(); ++v) go(v, 1u << v, 1);
    return best;
}

SmallGraph random_graph(int n, int m, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    for (std::size_t i = all.size(); i > 1; --i) {
        std::swap(all[i - 1], all[rng() % i]);
    }
    SmallGraph g(n);
    for (int i = 0; i < m && i < static_cast<int>(all.size()); ++i) {
        g.add_edge(all[i].first, all[i].second);
    }
    return g;
}

// Exact girth: shortest cycle through edge {u,v} = dist(u,v) without it, + 1.
int girth(const SmallGraph& g) {
    int best = INT_MAX;
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(g.n(), -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int x = queue[h];
            std::uint32_t nb = g.neighbors(x);
            while (nb) {
                int y = std::countr_zero(nb);
                nb &= nb - 1;
                if ((x == u && y == v) || (x == v && y == u)) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
    }
    return best;
}

SmallGraph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    SmallGraph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

// Independent replay of an arrow_check witness: red is admissible and
// maximal, blue is the exact complement, and its longest path is as claimed.
void check_witness(const SmallGraph& g, std::optional<int> cap, int n_path,
                   const ArrowResult& res) {
    REQUIRE(!res.arrows);
    SmallGraph red = from_edges(g.n(), res.witness);
    int gi = girth(red);
    if (cap) {
        CHECK(gi > *cap);
    } else {
        CHECK(gi == INT_MAX);
    }
    SmallGraph blue(g.n());
    for (auto [u, v] : g.edges()) {
        bool in_red = std::find(res.witness.begin(), res.witness.end(), std::make_pair(u, v)) !=
                      res.witness.end();
        CHECK(!(in_red && !g.adjacent(u, v)));
        if (!in_red) blue.add_edge(u, v);
    }
    CHECK(red.edge_count() + blue.edge_count() == g.edge_count());
    CHECK(longest_path_exact(blue) == res.witness_blue_longest);
    CHECK(res.witness_blue_longest < n_path);
    // Maximality: every blue edge would close a short red cycle if added.
    for (auto [u, v] : blue.edges()) {
        SmallGraph aug = red;
        aug.add_edge(u, v);
        int gi2 = girth(aug);
        if (cap) {
            CHECK(gi2 <= *cap);
        } else {
            CHECK(gi2 < INT_MAX);
        }
    }
}

}  // namespace

TEST_CASE("edge list parsing, formatting, and validation") {
    std::string text =
        "# small test graph\n"
        "4 3\n"
        "\n"
        "2 1\n"
        "0 1\n"
        "# trailing comment\n"
        "3 0\n";
    EdgeListGraph g = parse_edge_list_text(text);
    CHECK(g.n == 4);
    REQUIRE(g.m() == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.connected());
    CHECK(g.degrees() == std::vector<int>{2, 2, 1, 1});

    EdgeListGraph back = parse_edge_list_text(format_edge_list(g));
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);

    CHECK_THROWS_AS(parse_edge_list_text("2 2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list_text("2 1\n0 1\n1 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list_text("3 1\n1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list_text("3 1\n0 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list_text("3 1\n0 1\n0 2\n"), std::invalid_argument);
    CHECK(!parse_edge_list_text("4 1\n0 1\n").connected());
}

TEST_CASE("graph generators") {
    EdgeListGraph pp = gen_path_power(10, 3);
    CHECK(pp.n == 10);
    CHECK(pp.m() == PowerPathGraph(10, 3).edge_count());
    SmallGraph spp(pp);
    PowerPathGraph ref(10, 3);
    for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) CHECK(spp.adjacent(u, v) == ref.adjacent(u, v));
    }

    CHECK(gen_complete(6).m() == 15);
    CHECK(gen_complete(2).edges == std::vector<std::pair<int, int>>{{0, 1}});

    for (auto [n, m] : std::vector<std::pair<int, long long>>{
             {4, 6}, {6, 9}, {9, 14}, {12, 18}, {20, 30}, {20, 60}, {33, 50}}) {
        EdgeListGraph r = gen_random_mindeg3(n, m, 42);
        CHECK(r.n == n);
        CHECK(r.m() == m);
        CHECK(r.connected());
        std::vector<int> deg = r.degrees();
        CHECK(*std::min_element(deg.begin(), deg.end()) >= 3);
        EdgeListGraph again = gen_random_mindeg3(n, m, 42);
        CHECK(again.edges == r.edges);
    }
    CHECK(gen_random_mindeg3(12, 24, 1).edges != gen_random_mindeg3(12, 24, 2).edges);

    CHECK_THROWS_AS(gen_random_mindeg3(3, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_mindeg3(8, 11, 0), std::invalid_argument);  // < ceil(3n/2)
    CHECK_THROWS_AS(gen_random_mindeg3(5, 11, 0), std::invalid_argument);  // > C(5,2)

    CHECK(make_graph("path_power:10:3").edges == pp.edges);
    CHECK(make_graph("complete:6").m() == 15);
    CHECK(make_graph("random_mindeg3:10:20:7").edges == gen_random_mindeg3(10, 20, 7).edges);
    CHECK_THROWS_AS(make_graph("grid:3:3"), std::invalid_argument);
    CHECK_THROWS_AS(make_graph("complete"), std::invalid_argument);
    CHECK_THROWS_AS(make_graph("complete:x"), std::invalid_argument);
}

TEST_CASE("longest path on structured graphs") {
    CHECK(longest_path_exact(SmallGraph(0)) == 0);
    CHECK(longest_path_exact(SmallGraph(1)) == 1);
    CHECK(longest_path_exact(SmallGraph(3)) == 1);

    CHECK(longest_path_exact(SmallGraph(gen_path_power(7, 1))) == 7);
    CHECK(longest_path_exact(SmallGraph(gen_path_power(5, 3))) == 5);
    CHECK(longest_path_exact(SmallGraph(gen_complete(4))) == 4);

    SmallGraph cycle(6);
    for (int i = 0; i < 6; ++i) cycle.add_edge(i, (i + 1) % 6);
    CHECK(longest_path_exact(cycle) == 6);

    SmallGraph star(6);
    for (int i = 1; i < 6; ++i) star.add_edge(0, i);
    CHECK(longest_path_exact(star) == 3);

    // Petersen: no Hamiltonian cycle, but a Hamiltonian path exists.
    SmallGraph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    CHECK(petersen.edge_count() == 15);
    CHECK(longest_path_exact(petersen) == 10);
}

TEST_CASE("longest path matches a brute-force baseline on random graphs") {
    std::mt19937_64 rng(0xabcde);
    for (int t = 0; t < 200; ++t) {
        int n = 4 + static_cast<int>(rng() % 7);
        int maxm = n * (n - 1) / 2;
        int m = static_cast<int>(rng() % (maxm + 1));
        SmallGraph g = random_graph(n, m, rng);
        CHECK(longest_path_exact(g) == brute_longest_path(g));
    }
}

TEST_CASE("branch-and-bound and the layered parallel DP agree with the serial DP") {
    std::mt19937_64 rng(0x77);
    LongestPathOptions bb;
    bb.dp_cap = 4;
    LongestPathOptions par;
    par.jobs = 2;
    for (int t = 0; t < 80; ++t) {
        int n = 5 + static_cast<int>(rng() % 8);
        int m = n + static_cast<int>(rng() % (2 * n));
        SmallGraph g = random_graph(n, m, rng);
        int ref = longest_path_exact(g);
        CHECK(longest_path_exact(g, bb) == ref);
        CHECK(longest_path_exact(g, par) == ref);
    }

    LongestPathOptions tiny_cap;
    tiny_cap.hard_cap = 10;
    CHECK_THROWS_AS(longest_path_exact(random_graph(12, 20, rng), tiny_cap),
                    std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph(33), std::invalid_argument);

    // Sparse instances keep branch-and-bound busy (complete graphs prune
    // instantly once the Hamiltonian dive sets the bound).
    LongestPathOptions no_time;
    no_time.dp_cap = 4;
    no_time.bb_seconds = 0.0;
    CHECK_THROWS_AS(longest_path_exact(SmallGraph(gen_random_mindeg3(26, 40, 3)), no_time),
                    std::runtime_error);

    LongestPathOptions bad;
    bad.dp_cap = 30;
    CHECK_THROWS_AS(longest_path_exact(SmallGraph(4), bad), std::invalid_argument);
}

TEST_CASE("arrow checks on small instances") {
    SmallGraph k4(gen_complete(4));

    ArrowResult t3 = arrow_check(k4, std::nullopt, 3);
    CHECK(t3.arrows);
    // Maximal acyclic red sets in a connected graph are its spanning trees;
    // K4 has 4^2 of them.
    CHECK(t3.red_sets_checked == 16);

    ArrowResult f4 = arrow_check(k4, std::nullopt, 4);
    REQUIRE(!f4.arrows);
    CHECK(f4.witness == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(f4.witness_blue_longest == 3);
    check_witness(k4, std::nullopt, 4, f4);

    SmallGraph p4(gen_path_power(4, 1));
    ArrowResult fp = arrow_check(p4, std::nullopt, 2);
    REQUIRE(!fp.arrows);
    CHECK(fp.witness == p4.edges());
    CHECK(fp.witness_blue_longest == 1);

    // Too few edges to arrow a 4-vertex path: a spanning red tree leaves
    // fewer than 3 blue edges.
    CHECK(!arrow_check(SmallGraph(gen_path_power(6, 1)), std::nullopt, 4).arrows);
    SmallGraph house(5);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}}) {
        house.add_edge(u, v);
    }
    CHECK(!arrow_check(house, std::nullopt, 4).arrows);

    // Short-cycle family on K4: maximal triangle-free red sets are the three
    // 4-cycles and the four stars.
    ArrowResult cap2 = arrow_check(k4, 3, 2);
    CHECK(cap2.arrows);
    CHECK(cap2.red_sets_checked == 7);
    ArrowResult cap3 = arrow_check(k4, 3, 3);
    REQUIRE(!cap3.arrows);
    check_witness(k4, 3, 3, cap3);

    CHECK_THROWS_AS(arrow_check(SmallGraph(gen_complete(9)), std::nullopt, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(arrow_check(k4, std::nullopt, 1), std::invalid_argument);
    CHECK_THROWS_AS(arrow_check(k4, 2, 3), std::invalid_argument);
}

TEST_CASE("arrow monotonicity and family containment") {
    std::vector<SmallGraph> graphs;
    graphs.push_back(SmallGraph(gen_complete(4)));
    graphs.push_back(SmallGraph(gen_path_power(5, 3)));
    graphs.push_back(SmallGraph(gen_path_power(6, 2)));
    std::mt19937_64 rng(0x9e37);
    for (int t = 0; t < 4; ++t) graphs.push_back(random_graph(5 + int(t % 2), 7, rng));

    for (const SmallGraph& g : graphs) {
        for (std::optional<int> cap : {std::optional<int>{}, std::optional<int>{3},
                                       std::optional<int>{4}}) {
            bool prev = true;
            for (int n_path = 2; n_path <= g.n() + 1; ++n_path) {
                ArrowResult r = arrow_check(g, cap, n_path);
                // arrows is monotone: a longer path is harder to force.
                CHECK(!(r.arrows && !prev));
                prev = r.arrows;
                if (!r.arrows) check_witness(g, cap, n_path, r);
                // Every short-cycle-free red set is in particular relevant to
                // the all-cycles family: arrows there is the weaker claim.
                if (cap && r.arrows) CHECK(arrow_check(g, std::nullopt, n_path).arrows);
            }
        }
    }
}

TEST_CASE("lemma oracle confirms the warm-up window") {
    SearchConfig cfg = warmup(4);
    LemmaVerdict v5 = lemma_oracle(cfg, 5);
    CHECK(v5.holds);
    CHECK(v5.counterexample.empty());
    CHECK(v5.colorings == 8LL * 8 * 8 * 8 * 8);
    CHECK(v5.open_checked > 0);

    LemmaVerdict par = lemma_oracle(cfg, 5, 2);
    CHECK(par.holds);
    CHECK(par.open_checked == v5.open_checked);

    // Wider windows cannot reopen a closed prefix.
    CHECK(lemma_oracle(cfg, 6).holds);
}

TEST_CASE("lemma oracle finds the first counterexample and matches the engine") {
    SearchConfig cfg = lemma22(3);
    cfg.target = Rational(1);
    SearchOutcome eng = segment_search_serial(cfg);
    REQUIRE(eng.status == SearchStatus::Failure);
    REQUIRE(static_cast<int>(eng.counterexample.size()) == 4);

    LemmaVerdict v = lemma_oracle(cfg, 4);
    REQUIRE(!v.holds);
    CHECK(v.counterexample == eng.counterexample);
    CHECK(v.colorings == 8LL * 8 * 8 * 8);

    // Replay: the counterexample is admitted and has no closing certificate.
    CHECK(cfg.start_pred.matches(v.counterexample.front()));
    CHECK(std::holds_alternative<std::monostate>(
        find_closing_certificate(coloring(cfg, v.counterexample), cfg)));

    // Every smaller index closes; the reported one is the enumeration-first.
    long long cex_idx = index_of_ups(v.counterexample, cfg.power);
    for (long long idx = 0; idx < cex_idx; ++idx) {
        std::vector<UpString> us = ups_of_index(idx, 4, cfg.power);
        if (!cfg.start_pred.matches(us.front())) continue;
        CHECK(!std::holds_alternative<std::monostate>(
            find_closing_certificate(coloring(cfg, us), cfg)));
    }

    // One column wider: the first counterexample is the same stack padded
    // with the all-blue up-string (blue edges never close anything new).
    LemmaVerdict wide = lemma_oracle(cfg, 5);
    REQUIRE(!wide.holds);
    std::vector<UpString> expect = eng.counterexample;
    expect.push_back(UpString(0, cfg.power));
    CHECK(wide.counterexample == expect);

    LemmaVerdict wpar = lemma_oracle(cfg, 5, 2);
    CHECK(!wpar.holds);
    CHECK(wpar.counterexample == wide.counterexample);
}

TEST_CASE("lemma oracle agrees with the engine across random configurations") {
    std::mt19937_64 rng(0xc0ffee);
    const EndpointPredicate starts[] = {EndpointPredicate::not_in({}), EndpointPredicate::has_blue(),
                                        EndpointPredicate::parse("not-rrr"),
                                        EndpointPredicate::parse("not-rrr-rrb")};
    const EndpointPredicate ends[] = {EndpointPredicate::not_in({}), EndpointPredicate::has_blue(),
                                      EndpointPredicate::parse("not-rrr")};
    const Rational targets[] = {Rational(1, 3), Rational(1, 2), Rational(4, 7), Rational(3, 4),
                                Rational(1)};
    int failures_seen = 0;
    for (int t = 0; t < 24; ++t) {
        SearchConfig cfg;
        cfg.power = 3;
        cfg.cycle_cap = 4 + static_cast<int>(rng() % 5);
        cfg.max_depth = 2 + static_cast<int>(rng() % 3);
        cfg.target = targets[rng() % 5];
        cfg.start_pred = starts[rng() % 4];
        cfg.end_pred = ends[rng() % 3];

        SearchOutcome eng = segment_search_serial(cfg);
        REQUIRE(eng.status != SearchStatus::Budget);
        int window = cfg.max_depth + 1;
        LemmaVerdict v = lemma_oracle(cfg, window);
        CHECK(v.holds == (eng.status == SearchStatus::Success));
        if (!v.holds) {
            ++failures_seen;
            CHECK(v.counterexample == eng.counterexample);
        }
    }
    CHECK(failures_seen > 0);
    CHECK(failures_seen < 24);
}

TEST_CASE("lemma oracle rejects out-of-budget windows") {
    SearchConfig cfg = warmup(4);
    CHECK_THROWS_AS(lemma_oracle(cfg, 8), std::invalid_argument);
    CHECK_THROWS_AS(lemma_oracle(cfg, 0), std::invalid_argument);
    CHECK_THROWS_AS(lemma_oracle(cfg, 3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(lemma_oracle(cfg, 5, 0), std::invalid_argument);
}
