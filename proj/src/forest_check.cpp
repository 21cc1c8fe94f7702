// Independent audit of ForestDecomposition claims. Deliberately shares no
// code with the builder: everything is recomputed from the graph and the
// claimed sets, including a private union-find for acyclicity.

#include "ramsey/lowerbound.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace ramsey {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::string check(const EdgeListGraph& g, int delta, const ForestDecomposition& d) {
    if (d.n != g.n) return "decomposition vertex count differs from the graph";
    if (g.n < 1) return "empty graph";

    std::vector<int> a0 = d.a0, a1 = d.a1, x = d.x, y = d.y;
    for (auto* s : {&a0, &a1, &x, &y}) std::sort(s->begin(), s->end());

    std::vector<int> seen(g.n, 0);
    for (const auto* s : {&a0, &a1, &x, &y}) {
        for (int v : *s) {
            if (v < 0 || v >= g.n) return "vertex out of range";
            ++seen[v];
        }
    }
    for (int v = 0; v < g.n; ++v) {
        if (seen[v] != 1) return "A0/A1/X/Y is not a partition of the vertices";
    }

    std::vector<int> deg_g(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++deg_g[u];
        ++deg_g[v];
    }
    if (*std::max_element(deg_g.begin(), deg_g.end()) > delta) {
        return "graph degree exceeds delta";
    }

    // Forest: edges of g, no repeats, acyclic.
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<std::pair<int, int>> fedges = d.forest;
    std::sort(fedges.begin(), fedges.end());
    if (std::adjacent_find(fedges.begin(), fedges.end()) != fedges.end()) {
        return "repeated forest edge";
    }
    std::vector<int> deg_f(g.n, 0);
    for (auto [u, v] : fedges) {
        if (!std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(u, v))) {
            return "forest edge not in the graph";
        }
        int ru = find(u), rv = find(v);
        if (ru == rv) return "forest contains a cycle";
        parent[ru] = rv;
        ++deg_f[u];
        ++deg_f[v];
    }

    for (int v : a0) {
        if (deg_f[v] != deg_g[v]) return "an A0 vertex lost forest degree";
    }
    for (int v : a1) {
        if (deg_f[v] < deg_g[v] - 1) return "an A1 vertex lost more than one edge";
    }

    // Independence of A0 u A1 and the X = N(A0 u A1) / Y separation.
    std::vector<char> in_a(g.n, 0);
    for (int v : a0) in_a[v] = 1;
    for (int v : a1) in_a[v] = 1;
    std::vector<char> nbr_a(g.n, 0);
    for (auto [u, v] : g.edges) {
        if (in_a[u] && in_a[v]) return "A0 u A1 is not independent";
        if (in_a[u]) nbr_a[v] = 1;
        if (in_a[v]) nbr_a[u] = 1;
    }
    for (int v = 0; v < g.n; ++v) {
        bool in_x = contains(x, v);
        if (in_a[v]) continue;
        if (in_x != (nbr_a[v] != 0)) return "X is not exactly the neighborhood of A0 u A1";
        if (!in_x && nbr_a[v]) return "an edge joins Y to A0 u A1";
    }

    // |A0| + |A1|/2 >= gamma_delta * n, exactly.
    Rational lhs = Rational(2 * static_cast<long long>(a0.size()) +
                                static_cast<long long>(a1.size()),
                            2);
    if (lhs < gamma_coefficient(delta) * Rational(g.n)) {
        return "the gamma count bound fails";
    }

    // Phase snapshots: X only ever grows, Y only shrinks; after Phase 1
    // every surviving Y-vertex has >= 2 X-neighbors, at the end >= 3.
    std::vector<int> p1x = d.phase1_x, p1y = d.phase1_y;
    std::sort(p1x.begin(), p1x.end());
    std::sort(p1y.begin(), p1y.end());
    if (!std::includes(x.begin(), x.end(), p1x.begin(), p1x.end())) {
        return "a Phase-1 X vertex left X";
    }
    if (!std::includes(p1y.begin(), p1y.end(), y.begin(), y.end())) {
        return "a final Y vertex was not in Y at the end of Phase 1";
    }
    std::vector<int> count(g.n, 0);
    for (auto [u, v] : g.edges) {
        if (contains(p1x, u)) ++count[v];
        if (contains(p1x, v)) ++count[u];
    }
    for (int v : p1y) {
        if (count[v] < 2) return "a Y vertex has fewer than 2 X-neighbors after Phase 1";
    }
    std::fill(count.begin(), count.end(), 0);
    for (auto [u, v] : g.edges) {
        if (contains(x, u)) ++count[v];
        if (contains(x, v)) ++count[u];
    }
    for (int v : y) {
        if (count[v] < 3) return "a Y vertex has fewer than 3 X-neighbors at termination";
    }
    return "";
}

}  // namespace

std::string forest_decomposition_error(const EdgeListGraph& g, int delta,
                                       const ForestDecomposition& d) {
    return check(g, delta, d);
}

}  // namespace ramsey
