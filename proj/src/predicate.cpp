#include "ramsey/predicate.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

// Canonical spellings never repeat an up-string; silently deduplicating
// would let distinct spellings of one predicate slip past round-trip checks.
void reject_duplicates(std::vector<UpString> items, std::string_view spec) {
    std::sort(items.begin(), items.end());
    if (std::adjacent_find(items.begin(), items.end()) != items.end()) {
        throw std::invalid_argument("repeated up-string in: " + std::string(spec));
    }
}

}  // namespace

EndpointPredicate::EndpointPredicate(Kind k, std::vector<UpString> items)
    : kind_(k), items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

EndpointPredicate EndpointPredicate::has_blue() { return EndpointPredicate(Kind::HasBlue, {}); }

EndpointPredicate EndpointPredicate::not_in(std::vector<UpString> banned) {
    return EndpointPredicate(Kind::NotIn, std::move(banned));
}

EndpointPredicate EndpointPredicate::allowed_set(std::vector<UpString> allowed) {
    if (allowed.empty()) throw std::invalid_argument("empty allowed set");
    return EndpointPredicate(Kind::AllowedSet, std::move(allowed));
}

EndpointPredicate EndpointPredicate::parse(std::string_view spec) {
    if (spec == "has-blue") return has_blue();
    if (spec.substr(0, 4) == "not-") {
        // "not-rrr", "not-rrr-rrb", ... lowercase strings joined by '-'.
        std::vector<UpString> banned;
        std::string_view rest = spec.substr(4);
        while (true) {
            auto dash = rest.find('-');
            std::string word(rest.substr(0, dash));
            if (word.empty()) throw std::invalid_argument("empty word in: " + std::string(spec));
            for (char& ch : word) ch = static_cast<char>(ch == 'r' ? 'R' : (ch == 'b' ? 'B' : ch));
            banned.push_back(UpString::parse(word));
            if (dash == std::string_view::npos) break;
            rest = rest.substr(dash + 1);
        }
        reject_duplicates(banned, spec);
        return not_in(std::move(banned));
    }
    if (spec.substr(0, 4) == "set:") {
        std::vector<UpString> allowed;
        std::string_view rest = spec.substr(4);
        while (true) {
            auto comma = rest.find(',');
            std::string_view item = rest.substr(0, comma);
            if (item.empty()) throw std::invalid_argument("empty item in: " + std::string(spec));
            allowed.push_back(UpString::parse(item));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        reject_duplicates(allowed, spec);
        return allowed_set(std::move(allowed));
    }
    throw std::invalid_argument("unknown endpoint predicate: " + std::string(spec));
}

bool EndpointPredicate::matches(const UpString& s) const {
    switch (kind_) {
        case Kind::HasBlue:
            return s.has_blue();
        case Kind::NotIn:
            return !std::binary_search(items_.begin(), items_.end(), s);
        case Kind::AllowedSet:
            return std::binary_search(items_.begin(), items_.end(), s);
    }
    return false;
}

std::string EndpointPredicate::to_string() const {
    switch (kind_) {
        case Kind::HasBlue:
            return "has-blue";
        case Kind::NotIn: {
            // Descending order reproduces the conventional spellings
            // "not-rrr" and "not-rrr-rrb".
            std::string s = "not";
            for (auto it = items_.rbegin(); it != items_.rend(); ++it) {
                s += '-';
                std::string t = it->to_string();
                for (char& ch : t) ch = static_cast<char>(ch == 'R' ? 'r' : 'b');
                s += t;
            }
            return s;
        }
        case Kind::AllowedSet: {
            std::string s = "set:";
            for (size_t i = 0; i < items_.size(); ++i) {
                if (i) s += ',';
                s += items_[i].to_string();
            }
            return s;
        }
    }
    return "";
}

std::vector<UpString> EndpointPredicate::allowed_upstrings(int p) const {
    std::vector<UpString> out;
    for (unsigned idx = 0; idx < (1u << p); ++idx) {
        UpString s(idx, p);
        if (matches(s)) out.push_back(s);
    }
    return out;
}

}  // namespace ramsey
