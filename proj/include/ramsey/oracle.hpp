#pragma once

#include "ramsey/graphio.hpp"
#include "ramsey/pathpower.hpp"
#include "ramsey/search_config.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ramsey {

// Bitmask-adjacency graph for exact exponential algorithms (n <= 32).
class SmallGraph {
public:
    explicit SmallGraph(int n);
    explicit SmallGraph(const EdgeListGraph& g);

    int n() const { return n_; }
    std::uint32_t neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

private:
    int n_;
    std::vector<std::uint32_t> adj_;
};

struct LongestPathOptions {
    int dp_cap = 22;          // subset DP up to here
    int hard_cap = 32;        // branch and bound beyond dp_cap, up to here
    double bb_seconds = 30.0; // exactness is never traded; running over throws
    int jobs = 1;             // layered parallel DP when > 1
};

// Exact maximum number of vertices on a simple path. Throws when n exceeds
// hard_cap (use the lower-bound toolkit's counting bound instead) or when the
// branch-and-bound time budget runs out.
int longest_path_exact(const SmallGraph& g, const LongestPathOptions& opts = {});

struct ArrowResult {
    bool arrows = true;
    // On false: a red edge set with no cycle <= cap (acyclic for the
    // all-cycles family) whose blue complement has no n-vertex path.
    std::vector<std::pair<int, int>> witness;
    int witness_blue_longest = 0;
    long long red_sets_checked = 0;
};

// arrows iff every admissible red subgraph leaves an n-vertex blue path.
// cycle_cap nullopt = the all-cycles family (red sets are forests). Only
// maximal admissible red sets are enumerated; removing red edges only helps
// blue. Deterministic: the first witness in enumeration order is reported.
ArrowResult arrow_check(const SmallGraph& g, std::optional<int> cycle_cap, int n_path,
                        int edge_cap = 30);

struct LemmaVerdict {
    bool holds = true;
    std::vector<UpString> counterexample;  // empty iff holds
    long long colorings = 0;               // enumerated (8^window)
    long long open_checked = 0;            // admitted by start_pred, no red cycle
};

// Exhaustive check of the segment lemma on a fixed window: every coloring of
// up(0..window-1) admitted by start_pred with no red cycle <= L must contain
// a qualifying blue path with endpoint <= max_depth. Counterexamples are
// reported at the smallest enumeration index (up(0) most significant digit),
// independent of jobs.
LemmaVerdict lemma_oracle(const SearchConfig& cfg, int window, int jobs = 1, int max_window = 7);

}  // namespace ramsey
