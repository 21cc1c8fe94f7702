#pragma once

#include "ramsey/pathpower.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ramsey {

// Profile states for the sweep DP over blue paths in a bandwidth-p graph.
//
// Vertices are swept in index order. A state records, for each of the last
// p+1 swept vertices (slot = vertex mod (p+1)), its role in the partial
// family of vertex-disjoint path fragments built so far:
//   Absent      not on the path
//   Interior    on the path, no open end here (both path edges placed, or it
//               is a finished endpoint such as the anchor's closed side)
//   Singleton   on the path, no edges yet (two open ends)
//   EndAnchor   the unique open end of the fragment containing the anchor
//   EndPair(s)  open end whose fragment's other open end sits in slot s
// A fragment end that slides out of the window while still open can never be
// connected again, so such states are dropped. The value kept per state is
// the maximum number of on-path vertices seen so far.
struct ProfileSet {
    // (packed state, best count), sorted by state for canonical order.
    std::vector<std::pair<uint32_t, int16_t>> states;

    bool empty() const { return states.empty(); }
};

class BluePathDP {
public:
    explicit BluePathDP(int power);  // 1 <= power <= 4

    int power() const { return power_; }

    ProfileSet initial() const { return ProfileSet{{{0u, 0}}}; }

    enum class VertexRole : uint8_t {
        Free,       // may be on or off the path
        Anchor,     // forced on the path as an endpoint (degree 1)
        Forbidden,  // forced off the path
    };

    // Sweeps vertex v into the profile. blue_mask bit (j-1) means the edge
    // {v-j, v} is blue (j = 1..power; bits for v-j < 0 must be clear).
    ProfileSet advance(const ProfileSet& in, int v, unsigned blue_mask, VertexRole role);

    // Given a profile in which vertices 0..f have been swept, the maximum
    // count over states forming one complete anchored path ending exactly at
    // f (f is the open anchored end, no other fragment or open end remains).
    // -1 when no such state exists.
    int best_complete(const ProfileSet& in, int f) const;

    // Full-sweep drivers (reuse this instance's scratch; an instance is not
    // shareable across threads).
    int max_path(const std::vector<UpString>& ups, int anchor, int endpoint,
                 const std::vector<char>& forbidden);
    std::vector<int> lexmin_path(const std::vector<UpString>& ups, int endpoint, int target_count);

private:
    int power_;
    int slots_;
    // Scratch for advance: value per packed state, versioned.
    std::vector<int16_t> val_;
    std::vector<uint32_t> stamp_;
    std::vector<uint32_t> touched_;
    uint32_t cur_stamp_ = 0;

    void bump(uint32_t key, int16_t cnt);
};

// Blue edges into v from below: bit (j-1) set iff v-j >= 0 and edge {v-j, v}
// is blue under the given up-strings (ups[x] colors edges x -> x+1..x+p).
unsigned blue_mask_at(const std::vector<UpString>& ups, int power, int v);

// Maximum vertex count of a blue path from `anchor` to `endpoint` using only
// vertices in {0..endpoint} minus those marked forbidden; -1 if none exists.
// forbidden may be shorter than endpoint+1 (missing entries mean allowed).
int max_blue_path(const std::vector<UpString>& ups, int power, int anchor, int endpoint,
                  const std::vector<char>& forbidden);

// The lexicographically least vertex sequence among maximum blue paths from 0
// to endpoint (target_count = that maximum, as returned by max_blue_path with
// anchor 0 and nothing forbidden). Empty when no such path exists.
std::vector<int> lexmin_blue_path(const std::vector<UpString>& ups, int power, int endpoint,
                                  int target_count);

}  // namespace ramsey
