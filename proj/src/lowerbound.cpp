#include "ramsey/lowerbound.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramsey {

void LowerBoundParams::validate() const {
    if (d < 4) throw std::invalid_argument("degree cutoff d must be >= 4");
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    if (alpha < Rational(0) || beta < Rational(0)) {
        throw std::invalid_argument("alpha and beta must be nonnegative");
    }
}

Rational gamma_coefficient(int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be >= 1");
    long long D = delta;
    return Rational(1, D * D + D + 2) + Rational(3, 2 * (D * D + 2 * D + 3));
}

namespace {

// Coefficient of beta inside f; its sign decides the adversary's beta.
Rational beta_coefficient(int d) {
    Rational g = gamma_coefficient(d);
    return Rational(1) - g - Rational(2, d - 3) * (Rational(1) + g);
}

}  // namespace

Rational f_value(const Rational& alpha, const Rational& beta, int d) {
    if (d <= 3) throw std::invalid_argument("f needs d >= 4 (2/(d-3) must exist)");
    Rational g = gamma_coefficient(d);
    return (Rational(1) - g) + beta * beta_coefficient(d) +
           alpha * Rational(2, d - 3) * (Rational(1) + g);
}

Rational density_threshold(int d) {
    if (d <= 3) throw std::invalid_argument("threshold needs d >= 4");
    Rational g = gamma_coefficient(d);
    if (beta_coefficient(d) < Rational(0)) {
        // beta = 0: solve (1-g) + alpha 2(1+g)/(d-3) = 1.
        return g * Rational(d - 3) / (Rational(2) * (Rational(1) + g));
    }
    // beta = alpha: f(a, a, d) = (1-g)(1+a), solve for 1.
    return g / (Rational(1) - g);
}

namespace {

// Vertex states during the greedy sweep.
enum class Part : unsigned char { Y, A0, A1, X };

struct Greedy {
    const std::vector<std::vector<int>>& adj;
    std::vector<Part> part;
    std::vector<int> xcount;  // |N(v) & X| for v still in Y
    ForestDecomposition out;

    explicit Greedy(const std::vector<std::vector<int>>& a)
        : adj(a), part(a.size(), Part::Y), xcount(a.size(), 0) {
        out.n = static_cast<int>(a.size());
    }

    void move_to_x(int u) {
        part[u] = Part::X;
        for (int w : adj[u]) {
            if (part[w] == Part::Y) ++xcount[w];
        }
    }

    void add_a0(int v) {
        part[v] = Part::A0;
        for (int u : adj[v]) {
            out.forest.emplace_back(std::min(u, v), std::max(u, v));
            if (part[u] == Part::Y) move_to_x(u);
        }
    }

    void add_a1(int v) {
        part[v] = Part::A1;
        int keep = -1;  // lowest-index X neighbor keeps its edge
        for (int u : adj[v]) {
            if (part[u] == Part::X && keep < 0) keep = u;
        }
        for (int u : adj[v]) {
            if (part[u] != Part::X || u == keep) {
                out.forest.emplace_back(std::min(u, v), std::max(u, v));
            }
            if (part[u] == Part::Y) move_to_x(u);
        }
    }

    int lowest(int bound) const {
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (part[v] == Part::Y && xcount[v] <= bound) return static_cast<int>(v);
        }
        return -1;
    }

    std::vector<int> collect(Part p) const {
        std::vector<int> out_v;
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (part[v] == p) out_v.push_back(static_cast<int>(v));
        }
        return out_v;
    }

    void run() {
        if (adj.empty()) return;
        add_a0(0);
        bool phase1_done = false;
        while (true) {
            int v = lowest(1);
            if (v >= 0) {
                add_a0(v);
                continue;
            }
            if (!phase1_done) {
                phase1_done = true;
                out.phase1_x = collect(Part::X);
                out.phase1_y = collect(Part::Y);
            }
            v = lowest(2);  // xcount <= 1 was just ruled out, so this is == 2
            if (v < 0) break;
            add_a1(v);
        }
        out.a0 = collect(Part::A0);
        out.a1 = collect(Part::A1);
        out.x = collect(Part::X);
        out.y = collect(Part::Y);
        std::sort(out.forest.begin(), out.forest.end());
    }
};

std::vector<std::vector<int>> adjacency(const EdgeListGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

}  // namespace

ForestDecomposition greedy_forest(const EdgeListGraph& g, int delta) {
    if (g.n < 1) throw std::invalid_argument("greedy_forest needs at least one vertex");
    if (!g.connected()) {
        throw std::invalid_argument(
            "greedy_forest needs a connected graph; decompose into components first");
    }
    std::vector<int> deg = g.degrees();
    if (!deg.empty() && *std::max_element(deg.begin(), deg.end()) > delta) {
        throw std::invalid_argument("graph has a vertex of degree above delta");
    }
    std::vector<std::vector<int>> adj = adjacency(g);
    Greedy run(adj);
    run.run();
    return run.out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

AdversaryColoring adversary_coloring(const EdgeListGraph& g, int d) {
    if (d < 4) throw std::invalid_argument("degree cutoff d must be >= 4");
    AdversaryColoring out;
    out.n = g.n;
    std::vector<int> deg = g.degrees();
    std::vector<char> in_b(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (deg[v] >= d + 1) {
            in_b[v] = 1;
            out.b.push_back(v);
        }
    }

    // Components of g - B, each fed to the greedy decomposition with the
    // labels mapped back.
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> adj = adjacency(g);
    int ncomp = 0;
    for (int s = 0; s < g.n; ++s) {
        if (in_b[s] || comp[s] >= 0) continue;
        std::vector<int> queue{s};
        comp[s] = ncomp;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (int u : adj[queue[h]]) {
                if (!in_b[u] && comp[u] < 0) {
                    comp[u] = ncomp;
                    queue.push_back(u);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> members(ncomp);
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] >= 0) members[comp[v]].push_back(v);
    }

    UnionFind red_uf(g.n);
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> local_of(g.n, -1);
        for (std::size_t i = 0; i < members[c].size(); ++i) local_of[members[c][i]] = int(i);
        EdgeListGraph sub;
        sub.n = static_cast<int>(members[c].size());
        for (auto [u, v] : g.edges) {
            if (local_of[u] >= 0 && local_of[v] >= 0) {
                sub.edges.emplace_back(local_of[u], local_of[v]);
            }
        }
        sub.normalize();
        int delta_c = 0;
        for (int dv : sub.degrees()) delta_c = std::max(delta_c, dv);
        ForestDecomposition fd = greedy_forest(sub, std::max(delta_c, 1));
        for (int v : fd.a0) out.a0.push_back(members[c][v]);
        for (int v : fd.a1) out.a1.push_back(members[c][v]);
        out.x_size += static_cast<long long>(fd.x.size());
        for (auto [u, v] : fd.forest) {
            int gu = members[c][u], gv = members[c][v];
            out.red.emplace_back(std::min(gu, gv), std::max(gu, gv));
            red_uf.unite(gu, gv);
        }
    }
    std::sort(out.a0.begin(), out.a0.end());
    std::sort(out.a1.begin(), out.a1.end());

    // Complete the red forest to a spanning forest of g: lowest edges first,
    // one tree per component of g.
    for (auto [u, v] : g.edges) {
        if (red_uf.unite(u, v)) out.red.emplace_back(u, v);
    }
    std::sort(out.red.begin(), out.red.end());
    for (auto e : g.edges) {
        if (!std::binary_search(out.red.begin(), out.red.end(), e)) out.blue.push_back(e);
    }

    out.blue_path_bound = Rational(g.n) - Rational(static_cast<long long>(out.a0.size())) -
                          Rational(static_cast<long long>(out.a1.size()), 2) +
                          Rational(static_cast<long long>(out.b.size())) + Rational(1);
    return out;
}

std::string export_adversary_coloring(const AdversaryColoring& c) {
    nlohmann::json j;
    auto edge_array = [](const std::vector<std::pair<int, int>>& es) {
        nlohmann::json a = nlohmann::json::array();
        for (auto [u, v] : es) a.push_back({u, v});
        return a;
    };
    j["red"] = edge_array(c.red);
    j["blue"] = edge_array(c.blue);
    j["A0"] = c.a0;
    j["A1"] = c.a1;
    j["B"] = c.b;
    return j.dump();
}

}  // namespace ramsey
