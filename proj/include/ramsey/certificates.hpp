#pragma once

#include "ramsey/pathpower.hpp"
#include "ramsey/predicate.hpp"
#include "ramsey/rational.hpp"

#include <vector>

namespace ramsey {

// A blue path anchored at 0 whose far endpoint k is the maximum vertex used;
// density = (|vertices|-1)/k, recorded exactly.
struct BluePathCert {
    std::vector<int> vertices;
    Rational density;

    int endpoint() const { return vertices.back(); }

    // Validates the shape (anchored at 0, distinct, last = max) and computes
    // the density. Throws std::invalid_argument on malformed input.
    static BluePathCert from_vertices(std::vector<int> vs);
};

// A red cycle, listed once around (wraparound edge implied).
struct RedCycleCert {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
};

// (count of nonzero vertices) / (max vertex), exact. The sequence must start
// at 0, have distinct entries, and contain something beyond 0.
Rational path_density(const std::vector<int>& vertices);

// True iff every consecutive pair is a blue edge of the coloring, the recorded
// density matches the vertex sequence, and end_pred holds on up(endpoint).
// Structural defects (bad anchor, repeats, last != max) and vertices above the
// frontier are rejected by throwing: such a certificate is not checkable.
bool check_blue_path(const UpColoring& c, const BluePathCert& cert, const EndpointPredicate& end_pred);

// True iff all cycle edges (including wraparound) are red, vertices are
// distinct, and 3 <= length <= cycle_cap. Undetermined or absent edges are
// rejected by throwing.
bool check_red_cycle(const UpColoring& c, const RedCycleCert& cert, int cycle_cap);

// Concatenates a on [0..k] with b translated by k; exact composed density
// (d1*k + d2*l)/(k+l), which is always >= min(d1, d2).
BluePathCert stitch(const BluePathCert& a, const BluePathCert& b);

}  // namespace ramsey
