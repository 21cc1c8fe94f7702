#pragma once

#include "ramsey/search_config.hpp"

#include <iosfwd>
#include <string>

namespace ramsey {

// Streaming transcript verification. The checker trusts only the certificates
// module: every leaf is replayed against the coloring reconstructed from its
// root-to-leaf branch labels, every internal node must enumerate its children
// completely in canonical order, and pops must close exactly the finished
// levels. Counterexample files are confirmed by replaying the full-depth
// coloring and searching it for any closing certificate.
enum class Verdict {
    Valid,
    Invalid,     // well-formed lines, but not a complete and sound proof
    ParseError,  // malformed header or line; no semantic judgement possible
};

struct VerifyStats {
    long long branches = 0;
    long long red_leaves = 0;
    long long blue_leaves = 0;
    long long pops = 0;
    int max_depth_seen = 0;      // deepest node (count of assigned up-strings)
    int max_blue_endpoint = 0;   // largest verified blue-path endpoint k
};

struct VerificationReport {
    Verdict verdict = Verdict::ParseError;
    bool counterexample_mode = false;
    long long line = 0;          // 1-based input line of the failure, 0 if none
    std::string message;
    SearchConfig config;         // meaningful once the header parsed
    VerifyStats stats;

    bool valid() const { return verdict == Verdict::Valid; }
};

VerificationReport verify_stream(std::istream& in);
VerificationReport verify_file(const std::string& path);
VerificationReport verify_bytes(const std::string& bytes);

}  // namespace ramsey
