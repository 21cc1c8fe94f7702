#include "ramsey/graphio.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ramsey {

void EdgeListGraph::normalize() {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("repeated edge");
    }
}

std::vector<int> EdgeListGraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool EdgeListGraph::connected() const {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

EdgeListGraph parse_edge_list(std::istream& in) {
    EdgeListGraph g;
    std::string line;
    bool have_header = false;
    long long m = 0;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> g.n >> m) || g.n < 0 || m < 0) {
                throw std::invalid_argument("edge list header must be 'n m'");
            }
            have_header = true;
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
        g.edges.emplace_back(u, v);
    }
    if (!have_header) throw std::invalid_argument("empty edge list");
    if (g.m() != m) throw std::invalid_argument("edge count does not match header");
    g.normalize();
    return g;
}

EdgeListGraph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const EdgeListGraph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
    for (auto [u, v] : g.edges) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

EdgeListGraph gen_path_power(int n, int power) {
    if (n < 1 || power < 1) throw std::invalid_argument("path power needs n >= 1, p >= 1");
    EdgeListGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v <= u + power && v < n; ++v) g.edges.emplace_back(u, v);
    }
    g.normalize();
    return g;
}

EdgeListGraph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    EdgeListGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    }
    return g;
}

namespace {

EdgeListGraph mindeg3_attempt(int n, long long m, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng() % (i + 1)]);
    }

    std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
    EdgeListGraph g;
    g.n = n;
    auto add = [&](int u, int v) {
        if (u == v || has[u][v]) return false;
        has[u][v] = has[v][u] = 1;
        g.edges.emplace_back(u, v);
        return true;
    };
    for (int i = 0; i < n; ++i) add(perm[i], perm[(i + 1) % n]);

    std::vector<int> deg(n, 2);
    auto bump = [&](int u, int v) {
        if (add(u, v)) {
            ++deg[u];
            ++deg[v];
            return true;
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        while (deg[v] < 3) {
            // Pair deficient vertices first so the minimum edge budget
            // (ceil(3n/2)) always suffices.
            std::vector<int> cands;
            for (int w = 0; w < n; ++w) {
                if (w != v && !has[v][w] && deg[w] < 3) cands.push_back(w);
            }
            if (cands.empty()) {
                for (int w = 0; w < n; ++w) {
                    if (w != v && !has[v][w]) cands.push_back(w);
                }
            }
            if (cands.empty() || g.m() >= m) throw std::logic_error("degree patching failed");
            bump(v, cands[rng() % cands.size()]);
        }
    }
    while (g.m() < m) {
        int u = static_cast<int>(rng() % n);
        int w = static_cast<int>(rng() % n);
        bump(u, w);
    }
    g.normalize();
    return g;
}

}  // namespace

EdgeListGraph gen_random_mindeg3(int n, long long m, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("min-degree-3 graphs need n >= 4");
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    long long min_edges = (3LL * n + 1) / 2;
    if (m < min_edges || m > max_edges) {
        throw std::invalid_argument("edge count incompatible with min degree 3");
    }
    // Tight budgets (m near ceil(3n/2)) can strand the last deficient pair on
    // an existing edge; retry with fresh randomness, deterministically.
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            return mindeg3_attempt(n, m, rng);
        } catch (const std::logic_error&) {
        }
    }
    throw std::logic_error("degree patching failed");
}

EdgeListGraph make_graph(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon == std::string::npos ? colon : colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    auto want = [&](std::size_t k) {
        if (parts.size() != k) throw std::invalid_argument("bad graph spec: " + spec);
    };
    try {
        if (parts[0] == "path_power") {
            want(3);
            return gen_path_power(std::stoi(parts[1]), std::stoi(parts[2]));
        }
        if (parts[0] == "complete") {
            want(2);
            return gen_complete(std::stoi(parts[1]));
        }
        if (parts[0] == "random_mindeg3") {
            want(4);
            return gen_random_mindeg3(std::stoi(parts[1]), std::stoll(parts[2]),
                                      std::stoull(parts[3]));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad graph spec: " + spec);
    }
    throw std::invalid_argument("unknown graph family: " + spec);
}

}  // namespace ramsey
