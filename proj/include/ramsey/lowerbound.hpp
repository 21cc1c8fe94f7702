#pragma once

#include "ramsey/graphio.hpp"
#include "ramsey/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Output of the two-phase greedy forest decomposition. A0/A1/X/Y partition
// the vertices; F is acyclic; A0 keeps its full degree inside F, A1 all but
// one edge; X = N(A0 u A1) and Y sees none of A0 u A1. The per-phase X/Y
// snapshots let callers audit the termination guarantees (every surviving
// Y-vertex has >= 2 X-neighbors after Phase 1, >= 3 at the end).
struct ForestDecomposition {
    int n = 0;
    std::vector<std::pair<int, int>> forest;  // u < v, sorted
    std::vector<int> a0, a1, x, y;            // ascending, pairwise disjoint
    std::vector<int> phase1_x, phase1_y;      // snapshot when Phase 1 ends
};

// Exact coefficients behind the edge-count threshold: a graph with
// (2 + alpha)n edges on (1 + beta)n vertices survives the counting argument
// only while f(alpha, beta, d) < 1.
struct LowerBoundParams {
    Rational alpha;
    Rational beta;
    int d = 5;      // degree cutoff separating B from the greedy phase
    int delta = 5;  // max degree fed into gamma

    void validate() const;  // d >= 4 (2/(d-3) must exist), delta >= 1
};

// gamma_D = 1/(D^2 + D + 2) + 3/(2 (D^2 + 2D + 3)), exactly.
Rational gamma_coefficient(int delta);

// f(alpha, beta, d) = (1 - g) + beta (1 - g - 2(1+g)/(d-3)) + alpha 2(1+g)/(d-3)
// with g = gamma_coefficient(d). Rejects d <= 3.
Rational f_value(const Rational& alpha, const Rational& beta, int d);

// Supremum alpha with max over beta in [0, alpha] of f(alpha, beta, d) < 1:
// the adversary picks beta = 0 when f is decreasing in beta, beta = alpha
// otherwise. Exact; maximized over d >= 4 at d = 5 (43/651).
Rational density_threshold(int d);

// Two-phase greedy over a connected graph with max degree <= delta. Lowest
// eligible vertex index first; Phase 2 keeps the X-edge with the lowest X
// endpoint. Throws on disconnected input or a degree above delta.
ForestDecomposition greedy_forest(const EdgeListGraph& g, int delta);

// Red/blue edge coloring whose red side is a spanning forest built around
// the greedy decomposition of g minus the high-degree set B.
struct AdversaryColoring {
    int n = 0;
    std::vector<std::pair<int, int>> red;   // acyclic
    std::vector<std::pair<int, int>> blue;  // complement within E(g)
    std::vector<int> b;                     // degree >= d+1, ascending
    std::vector<int> a0, a1;                // union over components of g - B
    long long x_size = 0;                   // |N(A0 u A1)| inside g - B
    // Counting bound on the order of any blue path:
    // N - |A0| - |A1|/2 + |B| + 1, before the +-slack adjustment.
    Rational blue_path_bound;
    // Constant-term slack carried by the reduction argument; reports must
    // surface it next to the bound instead of folding it in.
    static constexpr int count_slack = 2;
};

// B = vertices of degree >= d+1; greedy_forest per component of g - B; red
// = forests completed to one spanning tree per component of g (lowest edges
// first); blue = the rest. Total for any graph; the bound is only meaningful
// on min-degree-3 inputs.
AdversaryColoring adversary_coloring(const EdgeListGraph& g, int d);

// {"red":[[u,v],...],"blue":[...],"A0":[...],"A1":[...],"B":[...]}
std::string export_adversary_coloring(const AdversaryColoring& c);

// Independent audit of a claimed decomposition against the graph and the
// documented invariants. Empty string when everything holds, otherwise a
// description of the first violation. Lives in its own translation unit and
// shares no code with greedy_forest.
std::string forest_decomposition_error(const EdgeListGraph& g, int delta,
                                       const ForestDecomposition& d);

}  // namespace ramsey
