#pragma once

#include "ramsey/pathpower.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Endpoint condition on an up-string, used at both ends of a segment lemma.
// Canonical spellings (accepted by parse, reproduced by to_string):
//   "has-blue"       at least one B
//   "not-rrr"        anything except RRR
//   "not-rrr-rrb"    anything except RRR and RRB
//   "set:BRR,RBR"    explicit allowed list (comma separated, stored sorted)
class EndpointPredicate {
public:
    static EndpointPredicate has_blue();
    static EndpointPredicate not_in(std::vector<UpString> banned);
    static EndpointPredicate allowed_set(std::vector<UpString> allowed);
    static EndpointPredicate parse(std::string_view spec);

    bool matches(const UpString& s) const;
    std::string to_string() const;

    // All length-p up-strings satisfying the predicate, ascending.
    std::vector<UpString> allowed_upstrings(int p) const;

    friend bool operator==(const EndpointPredicate& a, const EndpointPredicate& b) {
        return a.kind_ == b.kind_ && a.items_ == b.items_;
    }

private:
    enum class Kind { HasBlue, NotIn, AllowedSet };
    EndpointPredicate(Kind k, std::vector<UpString> items);

    Kind kind_;
    std::vector<UpString> items_;  // banned (NotIn) or allowed (AllowedSet), sorted
};

}  // namespace ramsey
