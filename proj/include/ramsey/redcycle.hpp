#pragma once

#include "ramsey/pathpower.hpp"

#include <vector>

namespace ramsey {

// Red-cycle detection over the edges determined by up-strings ups[0..f]
// (edge {x,y}, x<y, exists iff y-x <= power; determined iff x <= f; vertices
// reach up to f+power). Results are canonicalized: minimum vertex first, then
// the direction whose second vertex is smaller.

// Shortest red cycle of length <= cycle_cap passing through `through`;
// shortest first, then lexicographically first by DFS order with ascending
// neighbors. Empty when none exists.
std::vector<int> find_red_cycle_through(const std::vector<UpString>& ups, int power, int cycle_cap,
                                        int through);

// Shortest red cycle of length <= cycle_cap anywhere in the determined graph;
// ties broken by smallest minimum vertex, then DFS order. Empty when none.
std::vector<int> find_red_cycle(const std::vector<UpString>& ups, int power, int cycle_cap);

// Minimum vertex first, then the smaller-second-vertex direction.
std::vector<int> canonical_cycle(std::vector<int> cycle);

}  // namespace ramsey
