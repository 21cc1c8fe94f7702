#include "ramsey/oracle.hpp"

#include "ramsey/bluepath_dp.hpp"
#include "ramsey/redcycle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <functional>
#include <stdexcept>

namespace ramsey {

SmallGraph::SmallGraph(int n) : n_(n) {
    if (n < 0 || n > 32) throw std::invalid_argument("SmallGraph needs 0 <= n <= 32");
    adj_.assign(n, 0);
}

SmallGraph::SmallGraph(const EdgeListGraph& g) : SmallGraph(g.n) {
    for (auto [u, v] : g.edges) add_edge(u, v);
}

void SmallGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        throw std::invalid_argument("bad edge");
    }
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
}

long long SmallGraph::edge_count() const {
    long long deg = 0;
    for (std::uint32_t m : adj_) deg += std::popcount(m);
    return deg / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint32_t up = adj_[u] >> (u + 1) << (u + 1);
        while (up) {
            int v = std::countr_zero(up);
            up &= up - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

namespace {

int lp_subset_dp(const SmallGraph& g) {
    int n = g.n();
    std::vector<std::uint32_t> ends(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) ends[std::size_t(1) << v] = 1u << v;
    int best = 1;
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        best = std::max(best, std::popcount(mask));
        while (e) {
            int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = g.neighbors(v) & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return best;
}

int lp_subset_dp_layered(const SmallGraph& g, int jobs) {
    int n = g.n();
    std::vector<std::atomic<std::uint32_t>> ends(std::size_t(1) << n);
    for (int v = 0; v < n; ++v) {
        ends[std::size_t(1) << v].store(1u << v, std::memory_order_relaxed);
    }
    std::vector<std::vector<std::uint32_t>> layers(n + 1);
    std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        layers[std::popcount(mask)].push_back(mask);
    }
    int best = 0;
    for (int k = 1; k <= n; ++k) {
        const std::vector<std::uint32_t>& layer = layers[k];
        bool any = false;
        long long sz = static_cast<long long>(layer.size());
#pragma omp parallel for schedule(static) num_threads(jobs) reduction(|| : any)
        for (long long i = 0; i < sz; ++i) {
            std::uint32_t mask = layer[i];
            std::uint32_t e = ends[mask].load(std::memory_order_relaxed);
            if (!e) continue;
            any = true;
            if (k == n) continue;
            while (e) {
                int v = std::countr_zero(e);
                e &= e - 1;
                std::uint32_t ext = g.neighbors(v) & ~mask;
                while (ext) {
                    int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    ends[mask | (1u << u)].fetch_or(1u << u, std::memory_order_relaxed);
                }
            }
        }
        if (!any) break;
        best = k;
    }
    return best;
}

struct BranchBound {
    const SmallGraph& g;
    int best = 1;
    std::chrono::steady_clock::time_point deadline = {};
    long long ticks = 0;

    std::uint32_t reachable(std::uint32_t from, std::uint32_t visited) const {
        std::uint32_t reach = 0, frontier = from;
        while (frontier) {
            reach |= frontier;
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(u);
            }
            frontier = next & ~visited & ~reach;
        }
        return reach;
    }

    void dfs(int v, std::uint32_t visited, int len) {
        if ((++ticks & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline) {
            throw std::runtime_error("longest_path_exact: branch-and-bound time budget exceeded");
        }
        best = std::max(best, len);
        std::uint32_t ext = g.neighbors(v) & ~visited;
        if (!ext) return;
        if (len + std::popcount(reachable(ext, visited)) <= best) return;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            dfs(u, visited | (1u << u), len + 1);
        }
    }
};

}  // namespace

int longest_path_exact(const SmallGraph& g, const LongestPathOptions& opts) {
    if (opts.dp_cap < 1 || opts.dp_cap > 24) {
        throw std::invalid_argument("dp_cap must be within [1, 24]");
    }
    int n = g.n();
    if (n == 0) return 0;
    if (n > opts.hard_cap || n > 32) {
        throw std::invalid_argument(
            "graph too large for exact longest path; use the lower-bound toolkit's "
            "counting bound instead");
    }
    if (n <= opts.dp_cap) {
        return opts.jobs > 1 ? lp_subset_dp_layered(g, opts.jobs) : lp_subset_dp(g);
    }
    BranchBound bb{g};
    bb.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opts.bb_seconds));
    for (int v = 0; v < n; ++v) {
        if (std::chrono::steady_clock::now() > bb.deadline) {
            throw std::runtime_error("longest_path_exact: branch-and-bound time budget exceeded");
        }
        bb.dfs(v, 1u << v, 1);
    }
    return bb.best;
}

ArrowResult arrow_check(const SmallGraph& g, std::optional<int> cycle_cap, int n_path,
                        int edge_cap) {
    if (n_path < 2) throw std::invalid_argument("path order must be at least 2");
    if (cycle_cap && *cycle_cap < 3) throw std::invalid_argument("cycle cap must be >= 3");
    std::vector<std::pair<int, int>> es = g.edges();
    if (static_cast<int>(es.size()) > edge_cap) {
        throw std::invalid_argument("edge count above the red-set enumeration cap");
    }
    int n = g.n();
    int m = static_cast<int>(es.size());
    std::vector<std::uint32_t> red(n, 0);
    std::vector<char> in_red(m, 0);
    ArrowResult res;

    // Red distance u -> v, capped; INT_MAX when disconnected in red.
    auto red_dist = [&](int u, int v) {
        if (u == v) return 0;
        std::uint32_t visited = 1u << u, frontier = 1u << u;
        int d = 0;
        while (frontier) {
            ++d;
            std::uint32_t next = 0, f = frontier;
            while (f) {
                int x = std::countr_zero(f);
                f &= f - 1;
                next |= red[x];
            }
            next &= ~visited;
            if ((next >> v) & 1u) return d;
            visited |= next;
            frontier = next;
        }
        return INT_MAX;
    };
    // Adding {u,v} creates a cycle of length red_dist(u,v) + 1; admissible red
    // sets must keep every cycle longer than the cap (any cycle, for nullopt).
    auto addable = [&](int i) {
        auto [u, v] = es[i];
        int d = red_dist(u, v);
        if (!cycle_cap) return d == INT_MAX;
        return d == INT_MAX || d + 1 > *cycle_cap;
    };

    std::function<void(int)> rec = [&](int i) {
        if (!res.arrows) return;
        if (i == m) {
            for (int j = 0; j < m; ++j) {
                if (!in_red[j] && addable(j)) return;  // not maximal
            }
            ++res.red_sets_checked;
            SmallGraph blue(n);
            for (int j = 0; j < m; ++j) {
                if (!in_red[j]) blue.add_edge(es[j].first, es[j].second);
            }
            int lp = longest_path_exact(blue);
            if (lp < n_path) {
                res.arrows = false;
                res.witness_blue_longest = lp;
                for (int j = 0; j < m; ++j) {
                    if (in_red[j]) res.witness.push_back(es[j]);
                }
            }
            return;
        }
        if (addable(i)) {
            auto [u, v] = es[i];
            in_red[i] = 1;
            red[u] |= 1u << v;
            red[v] |= 1u << u;
            rec(i + 1);
            in_red[i] = 0;
            red[u] &= ~(1u << v);
            red[v] &= ~(1u << u);
            if (!res.arrows) return;
        }
        rec(i + 1);
    };
    rec(0);
    return res;
}

LemmaVerdict lemma_oracle(const SearchConfig& cfg, int window, int jobs, int max_window) {
    cfg.validate();
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (window > max_window) {
        throw std::invalid_argument("window above the oracle enumeration budget");
    }
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    const int p = cfg.power;
    const long long base = 1LL << p;
    long long total = 1;
    for (int i = 0; i < window; ++i) total *= base;
    const int jmax = std::min(window - 1, cfg.max_depth);
    const long long tnum = cfg.target.num(), tden = cfg.target.den();

    // Chunk by the leading digits so up(0) is shared within a chunk and the
    // first (smallest-index) counterexample wins deterministically.
    const int chunk_digits = std::min(window, 2);
    long long chunks = 1;
    for (int i = 0; i < chunk_digits; ++i) chunks *= base;
    const long long stride = total / chunks;

    std::atomic<long long> first_cex{LLONG_MAX};
    // Complete when the lemma holds; a lower bound otherwise (chunks past the
    // first counterexample abort early).
    std::atomic<long long> opens{0};

#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
    for (long long c = 0; c < chunks; ++c) {
        long long start = c * stride;
        if (first_cex.load(std::memory_order_relaxed) < start) continue;
        int digit0 = static_cast<int>(start >> (p * (window - 1)));
        if (!cfg.start_pred.matches(UpString(static_cast<unsigned>(digit0), p))) continue;

        BluePathDP dp(p);
        std::vector<UpString> ups(window);
        long long local_opens = 0;
        for (long long idx = start; idx < start + stride; ++idx) {
            if ((idx & 0xfff) == 0 && first_cex.load(std::memory_order_relaxed) < start) break;
            for (int v = 0; v < window; ++v) {
                ups[v] = UpString(static_cast<unsigned>((idx >> (p * (window - 1 - v))) & (base - 1)),
                                  p);
            }
            if (!find_red_cycle(ups, p, cfg.cycle_cap).empty()) continue;
            ++local_opens;
            bool closed = false;
            for (int j = jmax; j >= 1; --j) {
                if (!cfg.end_pred.matches(ups[j])) continue;
                int cnt = dp.max_path(ups, 0, j, {});
                if (cnt >= 2 && static_cast<long long>(cnt - 1) * tden >= tnum * j) {
                    closed = true;
                    break;
                }
            }
            if (!closed) {
                long long cur = first_cex.load(std::memory_order_relaxed);
                while (idx < cur &&
                       !first_cex.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
                }
                break;
            }
        }
        opens.fetch_add(local_opens, std::memory_order_relaxed);
    }

    LemmaVerdict out;
    out.colorings = total;
    out.open_checked = opens.load(std::memory_order_relaxed);
    long long cex = first_cex.load(std::memory_order_relaxed);
    if (cex != LLONG_MAX) {
        out.holds = false;
        for (int v = 0; v < window; ++v) {
            out.counterexample.push_back(
                UpString(static_cast<unsigned>((cex >> (p * (window - 1 - v))) & (base - 1)), p));
        }
    }
    return out;
}

}  // namespace ramsey
