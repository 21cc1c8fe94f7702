#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

enum class Color : uint8_t { Blue = 0, Red = 1 };

char color_to_char(Color c);
Color color_from_char(char ch);

// The colors of the edges from a vertex v to v+1, v+2, ..., v+len. Packed so
// that copies are trivial; numeric order of index() coincides with
// lexicographic order of the B/R string (B < R), which fixes the canonical
// branching order everywhere.
class UpString {
public:
    UpString() : bits_(0), len_(0) {}
    UpString(unsigned index, int len);

    int length() const { return len_; }
    // Color of edge {v, v+j+1}, j in [0, length).
    Color color(int j) const;
    // Numeric value; most significant bit is the first edge.
    unsigned index() const { return bits_; }

    bool has_blue() const;
    bool all_red() const { return !has_blue(); }

    std::string to_string() const;
    static UpString parse(std::string_view s);

    friend bool operator==(const UpString& a, const UpString& b) {
        return a.len_ == b.len_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const UpString& a, const UpString& b) { return !(a == b); }
    friend bool operator<(const UpString& a, const UpString& b);

private:
    uint8_t bits_;
    uint8_t len_;
};

// The p-th power of a path on n path-ordered vertices 0..n-1; u ~ v iff
// 1 <= |u - v| <= p.
struct PowerPathGraph {
    int n_vertices;
    int power;

    PowerPathGraph(int n, int p);

    bool adjacent(int u, int v) const;
    std::vector<int> neighbors(int v) const;  // ascending
    // p*n - p(p+1)/2; requires n >= p+1 so the formula's telescoping applies.
    long long edge_count() const;
    // min(power, n-1-v): how many up-neighbors v has.
    int up_length(int v) const;
};

// A partial coloring given by up-strings assigned to vertices 0..frontier.
// Every edge {u,v} with min(u,v) <= frontier has a determined color; edges
// above the frontier are unassigned. Immutable: extend returns a new value.
class UpColoring {
public:
    explicit UpColoring(PowerPathGraph g);
    UpColoring(PowerPathGraph g, std::vector<UpString> ups);

    const PowerPathGraph& graph() const { return graph_; }
    // Index of the last assigned vertex; -1 when nothing is assigned.
    int frontier() const { return static_cast<int>(ups_.size()) - 1; }
    const UpString& up(int v) const;

    // nullopt when the edge is not yet determined. Non-edges are rejected.
    std::optional<Color> edge_color(int u, int v) const;

    UpColoring extend(UpString s) const;

    // Comma-joined up-strings in vertex order, e.g. "BRR,RBR".
    std::string serialize() const;

private:
    PowerPathGraph graph_;
    std::vector<UpString> ups_;
};

}  // namespace ramsey
