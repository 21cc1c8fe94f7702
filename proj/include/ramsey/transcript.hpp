#pragma once

#include "ramsey/pathpower.hpp"
#include "ramsey/rational.hpp"

#include <string>
#include <vector>

namespace ramsey {

// Emits transcript lines (JSON-lines, minified, one '\n' per line) with
// lazily flushed pops: a pop is written only when the next branch sits at the
// same depth or shallower. A writer seeded at depth 0 never emits a leading
// pop, so per-subtree chunks concatenate into exactly the bytes one serial
// writer would have produced once the assembler inserts the boundary pops.
class TranscriptWriter {
public:
    // depth: number of assigned up-strings at the node (root children are 1).
    void branch(int depth, const UpString& label);
    void leaf_red(const std::vector<int>& cycle);
    void leaf_blue(const std::vector<int>& path, const Rational& density);
    // Trailing pop back to the root, for a complete serial transcript.
    void pop_to_root();

    int current_depth() const { return cur_depth_; }
    const std::string& bytes() const { return buf_; }
    std::string take() { return std::move(buf_); }

    // The pop a serial writer would emit between a node at from_depth and the
    // next preorder node at to_depth.
    static void append_boundary_pop(std::string& out, int from_depth, int to_depth);

private:
    std::string buf_;
    int cur_depth_ = 0;
};

}  // namespace ramsey
