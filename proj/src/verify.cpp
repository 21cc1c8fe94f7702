#include "ramsey/verify.hpp"

#include "ramsey/certificates.hpp"
#include "ramsey/engine.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ramsey {

namespace {

struct Frame {
    UpString label;
    std::size_t next_child = 0;
    bool closed = false;  // a leaf certificate was verified at this node
};

class Checker {
public:
    explicit Checker(std::istream& in) : in_(in) {}

    VerificationReport run() {
        std::string line;
        if (!std::getline(in_, line)) return parse_error(1, "empty input, header expected");
        try {
            report_.config = SearchConfig::from_header_line(line);
        } catch (const std::exception& e) {
            return parse_error(1, e.what());
        }
        cfg_ = &report_.config;
        root_children_ = cfg_->start_pred.allowed_upstrings(cfg_->power);
        for (unsigned b = 0; b < (1u << cfg_->power); ++b) all_children_.emplace_back(b, cfg_->power);

        long long line_no = 1;
        while (std::getline(in_, line)) {
            ++line_no;
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const std::exception& e) {
                return parse_error(line_no, e.what());
            }
            if (!j.is_object() || j.size() != 1) {
                return parse_error(line_no, "each line must be an object with exactly one key");
            }
            VerificationReport* done = nullptr;
            if (j.contains("branch")) {
                done = on_branch(line_no, j["branch"]);
            } else if (j.contains("leaf")) {
                done = on_leaf(line_no, j["leaf"]);
            } else if (j.contains("pop")) {
                done = on_pop(line_no, j["pop"]);
            } else if (j.contains("counterexample")) {
                if (report_.stats.branches > 0 || line_no != 2) {
                    return parse_error(line_no, "counterexample must be the only body line");
                }
                return on_counterexample(line_no, j["counterexample"]);
            } else {
                return parse_error(line_no, "unknown line kind");
            }
            if (done) return *done;
        }

        if (!frames_.empty()) {
            return invalid(line_no, "input ended inside an open subtree");
        }
        if (root_cursor_ != root_children_.size()) {
            return invalid(line_no, "root is missing admitted start up-strings");
        }
        report_.verdict = Verdict::Valid;
        return report_;
    }

private:
    int depth() const { return static_cast<int>(frames_.size()); }

    const std::vector<UpString>& expected_children(bool at_root) const {
        return at_root ? root_children_ : all_children_;
    }

    VerificationReport parse_error(long long line_no, const std::string& msg) {
        report_.verdict = Verdict::ParseError;
        report_.line = line_no;
        report_.message = msg;
        return report_;
    }

    VerificationReport invalid(long long line_no, const std::string& msg) {
        report_.verdict = Verdict::Invalid;
        report_.line = line_no;
        report_.message = msg;
        return report_;
    }

    // Returns nullptr to continue, or a final report on failure. The stash_
    // member keeps the returned report alive.
    VerificationReport* fail_parse(long long line_no, const std::string& msg) {
        stash_ = parse_error(line_no, msg);
        return &stash_;
    }

    VerificationReport* fail(long long line_no, const std::string& msg) {
        stash_ = invalid(line_no, msg);
        return &stash_;
    }

    VerificationReport* on_branch(long long line_no, const nlohmann::json& v) {
        if (!v.is_string()) return fail_parse(line_no, "branch label must be a string");
        UpString label;
        try {
            label = UpString::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            return fail_parse(line_no, e.what());
        }
        if (label.length() != cfg_->power) return fail(line_no, "branch label has the wrong length");

        bool at_root = frames_.empty();
        if (!at_root && frames_.back().closed) {
            return fail(line_no, "branch under a node already closed by a leaf");
        }
        std::size_t& cursor = at_root ? root_cursor_ : frames_.back().next_child;
        const std::vector<UpString>& expect = expected_children(at_root);
        if (cursor >= expect.size()) {
            return fail(line_no, "node already has all of its children");
        }
        if (!(expect[cursor] == label)) {
            return fail(line_no, "child out of canonical order (expected " +
                                     expect[cursor].to_string() + ", got " + label.to_string() +
                                     ")");
        }
        ++cursor;
        if (depth() + 1 > cfg_->max_depth + 1) {
            return fail(line_no, "branch exceeds the depth cap");
        }
        frames_.push_back(Frame{label, 0, false});
        labels_.push_back(label);
        ++report_.stats.branches;
        report_.stats.max_depth_seen = std::max(report_.stats.max_depth_seen, depth());
        return nullptr;
    }

    VerificationReport* on_leaf(long long line_no, const nlohmann::json& leaf) {
        if (frames_.empty()) return fail(line_no, "leaf with no current node");
        Frame& top = frames_.back();
        if (top.closed) return fail(line_no, "second leaf at one node");
        if (top.next_child != 0) return fail(line_no, "leaf at a node that already branched");
        if (!leaf.is_object()) return fail_parse(line_no, "leaf must be an object");

        UpColoring c(PowerPathGraph(cfg_->n_vertices(), cfg_->power), labels_);
        if (leaf.contains("red_cycle")) {
            if (leaf.size() != 1) return fail_parse(line_no, "red leaf carries exactly one field");
            std::vector<int> cyc;
            if (auto* r = read_int_array(leaf["red_cycle"], cyc)) return fail_parse(line_no, *r);
            try {
                if (!check_red_cycle(c, RedCycleCert{cyc}, cfg_->cycle_cap)) {
                    return fail(line_no, "red cycle does not check out");
                }
            } catch (const std::exception& e) {
                return fail(line_no, std::string("red cycle rejected: ") + e.what());
            }
            ++report_.stats.red_leaves;
        } else if (leaf.contains("blue_path")) {
            if (leaf.size() != 2 || !leaf.contains("density")) {
                return fail_parse(line_no, "blue leaf carries blue_path and density");
            }
            std::vector<int> path;
            if (auto* r = read_int_array(leaf["blue_path"], path)) return fail_parse(line_no, *r);
            if (!leaf["density"].is_string()) {
                return fail_parse(line_no, "density must be a string rational");
            }
            Rational density;
            try {
                density = Rational::parse(leaf["density"].get<std::string>());
            } catch (const std::exception& e) {
                return fail_parse(line_no, e.what());
            }
            try {
                BluePathCert cert = BluePathCert::from_vertices(path);
                cert.density = density;  // recorded value; checked against the vertices below
                if (!check_blue_path(c, cert, cfg_->end_pred)) {
                    return fail(line_no, "blue path does not check out");
                }
                if (density < cfg_->target) {
                    return fail(line_no, "blue path density below the target");
                }
                report_.stats.max_blue_endpoint =
                    std::max(report_.stats.max_blue_endpoint, cert.endpoint());
            } catch (const std::exception& e) {
                return fail(line_no, std::string("blue path rejected: ") + e.what());
            }
            ++report_.stats.blue_leaves;
        } else {
            return fail_parse(line_no, "unknown leaf kind");
        }
        top.closed = true;
        return nullptr;
    }

    // Reads a JSON array of integers; returns an error message on mismatch.
    const std::string* read_int_array(const nlohmann::json& v, std::vector<int>& out) {
        static thread_local std::string err;
        if (!v.is_array()) {
            err = "expected an array of integers";
            return &err;
        }
        out.clear();
        for (const auto& x : v) {
            if (!x.is_number_integer()) {
                err = "vertex is not an integer";
                return &err;
            }
            long long n = x.get<long long>();
            if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
                err = "vertex out of range";
                return &err;
            }
            out.push_back(static_cast<int>(n));
        }
        return nullptr;
    }

    VerificationReport* on_pop(long long line_no, const nlohmann::json& v) {
        if (!v.is_number_integer()) return fail_parse(line_no, "pop count must be an integer");
        long long m = v.get<long long>();
        if (m < 1) return fail_parse(line_no, "pop count must be positive");
        if (m > depth()) return fail(line_no, "pop below the root");
        for (long long i = 0; i < m; ++i) {
            const Frame& top = frames_.back();
            bool complete = top.closed || top.next_child == all_children_.size();
            if (!complete) return fail(line_no, "pop closes a node with missing children");
            frames_.pop_back();
            labels_.pop_back();
        }
        if (!frames_.empty()) {
            const Frame& top = frames_.back();
            if (top.closed || top.next_child == all_children_.size()) {
                return fail(line_no, "pop stopped at an already finished node");
            }
        }
        ++report_.stats.pops;
        return nullptr;
    }

    VerificationReport on_counterexample(long long line_no, const nlohmann::json& v) {
        report_.counterexample_mode = true;
        if (!v.is_array()) return parse_error(line_no, "counterexample must be an array");
        std::vector<UpString> cex;
        for (const auto& x : v) {
            if (!x.is_string()) return parse_error(line_no, "counterexample entries must be strings");
            try {
                cex.push_back(UpString::parse(x.get<std::string>()));
            } catch (const std::exception& e) {
                return parse_error(line_no, e.what());
            }
        }
        std::string extra;
        if (std::getline(in_, extra)) return parse_error(line_no + 1, "trailing data after counterexample");
        if (static_cast<int>(cex.size()) != cfg_->max_depth + 1) {
            return invalid(line_no, "counterexample does not reach full depth");
        }
        for (const UpString& u : cex) {
            if (u.length() != cfg_->power) return invalid(line_no, "up-string of the wrong length");
        }
        if (!cfg_->start_pred.matches(cex.front())) {
            return invalid(line_no, "counterexample start is not admitted");
        }
        UpColoring c(PowerPathGraph(cfg_->n_vertices(), cfg_->power), cex);
        if (!std::holds_alternative<std::monostate>(find_closing_certificate(c, *cfg_))) {
            return invalid(line_no, "coloring admits a closing certificate; not a refutation");
        }
        report_.verdict = Verdict::Valid;
        return report_;
    }

    std::istream& in_;
    const SearchConfig* cfg_ = nullptr;
    VerificationReport report_;
    VerificationReport stash_;
    std::vector<UpString> root_children_, all_children_;
    std::vector<Frame> frames_;
    std::vector<UpString> labels_;
    std::size_t root_cursor_ = 0;
};

}  // namespace

VerificationReport verify_stream(std::istream& in) { return Checker(in).run(); }

VerificationReport verify_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        VerificationReport r;
        r.verdict = Verdict::ParseError;
        r.message = "cannot open " + path;
        return r;
    }
    return verify_stream(in);
}

VerificationReport verify_bytes(const std::string& bytes) {
    std::istringstream in(bytes);
    return verify_stream(in);
}

}  // namespace ramsey
