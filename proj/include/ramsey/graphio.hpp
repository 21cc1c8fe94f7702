#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Shared edge-list representation for graph-valued inputs: the oracle packs
// it into bitmask adjacency, the lower-bound toolkit into adjacency lists.
struct EdgeListGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, no repeats

    void normalize();       // orient, sort, reject loops/repeats/out-of-range
    long long m() const { return static_cast<long long>(edges.size()); }
    std::vector<int> degrees() const;
    bool connected() const;
};

// Text format: "n m" on the first line, then one "u v" per line. Lines that
// are empty or start with '#' are skipped.
EdgeListGraph parse_edge_list(std::istream& in);
EdgeListGraph parse_edge_list_text(const std::string& text);
std::string format_edge_list(const EdgeListGraph& g);

EdgeListGraph gen_path_power(int n, int power);
EdgeListGraph gen_complete(int n);
// Hamiltonian cycle from a seeded shuffle, patched to minimum degree 3, then
// filled with random chords up to m edges. Deterministic in (n, m, seed).
EdgeListGraph gen_random_mindeg3(int n, long long m, std::uint64_t seed);

// "path_power:N:p" | "complete:N" | "random_mindeg3:N:M:SEED"
EdgeListGraph make_graph(const std::string& spec);

}  // namespace ramsey
