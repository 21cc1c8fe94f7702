#include "ramsey/redcycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

struct RedGraph {
    const std::vector<UpString>& ups;
    int power;
    int frontier;    // ups.size() - 1
    int max_vertex;  // frontier + power

    bool red(int x, int y) const {
        int lo = x < y ? x : y, hi = x < y ? y : x;
        if (lo < 0 || hi - lo < 1 || hi - lo > power) return false;
        if (lo > frontier) return false;  // undetermined
        return ups[lo].color(hi - lo - 1) == Color::Red;
    }

    int red_degree(int v) const {
        int d = 0;
        for (int y = v - power; y <= v + power; ++y) {
            if (y != v && y >= 0 && y <= max_vertex && red(v, y)) ++d;
        }
        return d;
    }
};

// Depth-first search for a red cycle of exactly `length` starting and ending
// at path[0], visiting vertices in ascending-neighbor order. min_vertex, when
// >= 0, restricts intermediate vertices to values above it (so each cycle is
// enumerated with its minimum vertex as the start).
bool dfs_cycle(const RedGraph& g, std::vector<int>& path, std::vector<char>& used, int length,
               int min_vertex) {
    int at = path.back();
    if (static_cast<int>(path.size()) == length) {
        return g.red(at, path[0]);
    }
    for (int y = at - g.power; y <= at + g.power; ++y) {
        if (y == at || y < 0 || y > g.max_vertex || used[y]) continue;
        if (y <= min_vertex) continue;
        if (!g.red(at, y)) continue;
        used[y] = 1;
        path.push_back(y);
        if (dfs_cycle(g, path, used, length, min_vertex)) return true;
        path.pop_back();
        used[y] = 0;
    }
    return false;
}

}  // namespace

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle too short");
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    if (cycle[1] > cycle.back()) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

std::vector<int> find_red_cycle_through(const std::vector<UpString>& ups, int power, int cycle_cap,
                                        int through) {
    if (ups.empty()) return {};
    RedGraph g{ups, power, static_cast<int>(ups.size()) - 1, static_cast<int>(ups.size()) - 1 + power};
    if (through < 0 || through > g.max_vertex) throw std::out_of_range("vertex out of range");
    if (g.red_degree(through) < 2) return {};
    std::vector<char> used(g.max_vertex + 1, 0);
    std::vector<int> path;
    for (int length = 3; length <= cycle_cap; ++length) {
        path.assign(1, through);
        std::fill(used.begin(), used.end(), 0);
        used[through] = 1;
        if (dfs_cycle(g, path, used, length, -1)) return canonical_cycle(path);
    }
    return {};
}

std::vector<int> find_red_cycle(const std::vector<UpString>& ups, int power, int cycle_cap) {
    if (ups.empty()) return {};
    RedGraph g{ups, power, static_cast<int>(ups.size()) - 1, static_cast<int>(ups.size()) - 1 + power};
    std::vector<char> used(g.max_vertex + 1, 0);
    std::vector<int> path;
    for (int length = 3; length <= cycle_cap; ++length) {
        for (int s = 0; s + length - 1 <= g.max_vertex; ++s) {
            path.assign(1, s);
            std::fill(used.begin(), used.end(), 0);
            used[s] = 1;
            if (dfs_cycle(g, path, used, length, s)) return canonical_cycle(path);
        }
    }
    return {};
}

}  // namespace ramsey
