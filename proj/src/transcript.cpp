#include "ramsey/transcript.hpp"

namespace ramsey {

namespace {

void append_int_list(std::string& out, const std::vector<int>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(xs[i]);
    }
    out += ']';
}

}  // namespace

void TranscriptWriter::append_boundary_pop(std::string& out, int from_depth, int to_depth) {
    if (to_depth <= from_depth) {
        out += "{\"pop\":";
        out += std::to_string(from_depth - to_depth + 1);
        out += "}\n";
    }
}

void TranscriptWriter::branch(int depth, const UpString& label) {
    append_boundary_pop(buf_, cur_depth_, depth);
    buf_ += "{\"branch\":\"";
    buf_ += label.to_string();
    buf_ += "\"}\n";
    cur_depth_ = depth;
}

void TranscriptWriter::leaf_red(const std::vector<int>& cycle) {
    buf_ += "{\"leaf\":{\"red_cycle\":";
    append_int_list(buf_, cycle);
    buf_ += "}}\n";
}

void TranscriptWriter::leaf_blue(const std::vector<int>& path, const Rational& density) {
    buf_ += "{\"leaf\":{\"blue_path\":";
    append_int_list(buf_, path);
    buf_ += ",\"density\":\"";
    buf_ += density.to_string();
    buf_ += "\"}}\n";
}

void TranscriptWriter::pop_to_root() {
    if (cur_depth_ > 0) {
        buf_ += "{\"pop\":";
        buf_ += std::to_string(cur_depth_);
        buf_ += "}\n";
        cur_depth_ = 0;
    }
}

}  // namespace ramsey
