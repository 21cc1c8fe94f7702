#pragma once

#include "ramsey/certificates.hpp"
#include "ramsey/search_config.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ramsey {

// Closing certificate for a partial coloring: a short red cycle if one
// exists, otherwise a qualifying blue path preferring the largest endpoint,
// then the highest density, then the lexicographically least vertex sequence.
// monostate when the coloring admits no certificate yet.
using ClosingCert = std::variant<std::monostate, RedCycleCert, BluePathCert>;

ClosingCert find_closing_certificate(const UpColoring& c, const SearchConfig& cfg);

struct SearchStats {
    long long nodes = 0;        // tree nodes visited (branch candidates)
    long long red_leaves = 0;
    long long blue_leaves = 0;
    int max_leaf_depth = 0;     // deepest leaf frontier
    int deepest_endpoint = 0;   // largest blue-path endpoint over all leaves

    void merge(const SearchStats& o);
};

enum class SearchStatus {
    Success,  // every branch closed; transcript holds the full proof tree
    Failure,  // a coloring at full depth admits no certificate
    Budget,   // node or time budget exhausted before a verdict
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::Budget;
    std::string transcript;                 // SUCCESS: complete transcript bytes
    std::vector<UpString> counterexample;   // FAILURE: replay-checked coloring
    SearchStats stats;
};

struct SearchBudget {
    long long max_nodes = -1;   // < 0: unlimited
    double max_seconds = -1.0;  // < 0: unlimited
};

struct SearchOptions {
    int jobs = 1;               // worker threads for the task phase
    int split_depth = 2;        // task roots live at this depth (clamped to [1, max_depth])
    SearchBudget budget;
    std::string checkpoint_dir; // empty: no checkpointing
    bool resume = false;        // reuse completed task chunks found in checkpoint_dir
};

// Deterministic search over all colorings admitted by start_pred: a serial
// skeleton expands the tree to split_depth, unresolved nodes become tasks, and
// chunk assembly reproduces the exact bytes of the serial writer regardless of
// jobs. FAILURE reports the DFS-first counterexample (smallest task index).
SearchOutcome segment_search(const SearchConfig& cfg, const SearchOptions& opts = {});

// Plain recursive single-writer implementation, kept as the reference for
// byte-equality tests and for benchmarking against the task pipeline.
SearchOutcome segment_search_serial(const SearchConfig& cfg, const SearchBudget& budget = {});

// True iff the coloring has full depth, an admitted start, and no closing
// certificate. segment_search re-checks this before reporting FAILURE.
bool replay_counterexample(const SearchConfig& cfg, const std::vector<UpString>& cex);

// Counterexample file bytes: config header plus one counterexample line.
std::string counterexample_file(const SearchConfig& cfg, const std::vector<UpString>& cex);

struct BoundReport {
    Rational density;       // proven blue-path density (the search target)
    int window = 0;         // vertices consumed per stitched segment: max_depth + 2
    long long n = 0;        // requested blue-path order
    long long min_n_host = 0;   // least N with density*(N - window) + 1 >= n
    long long edge_bound = 0;   // edges of the host graph: p*N - p*(p+1)/2
    Rational coefficient;   // asymptotic edges-per-vertex factor: p / density
    std::string note;
};

// Turns a verified SUCCESS outcome into the explicit size bound. The window
// charges two extra vertices per segment because the stitch may have to enter
// at vertex 1 or 2 of the next window instead of vertex 0.
BoundReport theorem_assemble(const SearchConfig& cfg, const SearchOutcome& outcome, long long n);

}  // namespace ramsey
