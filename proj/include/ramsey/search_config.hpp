#pragma once

#include "ramsey/predicate.hpp"
#include "ramsey/rational.hpp"

#include <string>
#include <string_view>

namespace ramsey {

// Parameters of one segment lemma: "every coloring of the unbounded path
// power satisfying start_pred with no red cycle of length <= cycle_cap admits
// a blue path from 0 to some k <= max_depth of density >= target whose
// endpoint satisfies end_pred".
struct SearchConfig {
    int cycle_cap = 5;
    Rational target = Rational(1, 2);
    EndpointPredicate start_pred = EndpointPredicate::has_blue();
    EndpointPredicate end_pred = EndpointPredicate::has_blue();
    int max_depth = 9;
    int power = 3;

    void validate() const;  // throws std::invalid_argument

    // Vertices the search can touch: up-strings go to max_depth, their edges
    // reach power further. This is the effective window (43 for max_depth 39
    // at power 3).
    int n_vertices() const { return max_depth + power + 1; }

    // The exact transcript header line (no trailing newline).
    std::string header_line() const;
    // Parses and validates a header line; throws std::runtime_error on
    // malformed input or an unsupported format version.
    static SearchConfig from_header_line(const std::string& line);

    friend bool operator==(const SearchConfig& a, const SearchConfig& b);
};

}  // namespace ramsey
