#include "ramsey/bluepath_dp.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace ramsey {

namespace {

constexpr uint8_t kAbsent = 0;
constexpr uint8_t kInterior = 1;
constexpr uint8_t kSingleton = 2;
constexpr uint8_t kEndAnchor = 3;
constexpr uint8_t kEndPair0 = 4;  // kEndPair0 + partner slot

inline bool is_open(uint8_t code) { return code >= kSingleton; }

}  // namespace

BluePathDP::BluePathDP(int power) : power_(power), slots_(power + 1) {
    if (power < 1 || power > 4) throw std::invalid_argument("blue path dp supports power 1..4");
    size_t space = size_t{1} << (4 * slots_);
    val_.assign(space, 0);
    stamp_.assign(space, 0);
}

void BluePathDP::bump(uint32_t key, int16_t cnt) {
    if (stamp_[key] != cur_stamp_) {
        stamp_[key] = cur_stamp_;
        val_[key] = cnt;
        touched_.push_back(key);
    } else if (cnt > val_[key]) {
        val_[key] = cnt;
    }
}

ProfileSet BluePathDP::advance(const ProfileSet& in, int v, unsigned blue_mask, VertexRole role) {
    ++cur_stamp_;
    touched_.clear();
    const int m = slots_;
    const int s = v % m;

    uint8_t c[8];
    uint8_t d[8];
    auto pack = [&](const uint8_t* arr) {
        uint32_t k = 0;
        for (int t = 0; t < m; ++t) k |= uint32_t(arr[t]) << (4 * t);
        return k;
    };

    for (const auto& [key0, cnt] : in.states) {
        for (int t = 0; t < m; ++t) c[t] = (key0 >> (4 * t)) & 0xFu;
        // The vertex leaving the window (it shares v's slot) must be settled;
        // an open end that slides out can never be connected again.
        if (c[s] != kAbsent && c[s] != kInterior) continue;
        c[s] = kAbsent;

        if (role != VertexRole::Anchor) {
            std::memcpy(d, c, sizeof d);
            bump(pack(d), cnt);  // v off the path
        }
        if (role == VertexRole::Forbidden) continue;

        // Open ends in the window that are blue-adjacent to v.
        int ends[8];
        int n_ends = 0;
        for (int j = 1; j <= power_; ++j) {
            if (!((blue_mask >> (j - 1)) & 1u)) continue;
            int t = s - j;
            if (t < 0) t += m;
            if (is_open(c[t])) ends[n_ends++] = t;
        }

        int16_t up = static_cast<int16_t>(cnt + 1);

        if (role == VertexRole::Anchor) {
            // Open entry: the anchor's single edge goes to a later vertex.
            std::memcpy(d, c, sizeof d);
            d[s] = kEndAnchor;
            bump(pack(d), up);
            // Closed entry: the anchor's single edge goes backward; the
            // touched fragment becomes the anchored one.
            for (int i = 0; i < n_ends; ++i) {
                int t = ends[i];
                uint8_t e = c[t];
                if (e == kEndAnchor) continue;  // no anchor exists before the anchor sweeps in
                std::memcpy(d, c, sizeof d);
                if (e == kSingleton) {
                    d[t] = kEndAnchor;
                } else {
                    int x = e - kEndPair0;
                    d[t] = kInterior;
                    d[x] = kEndAnchor;
                }
                d[s] = kInterior;
                bump(pack(d), up);
            }
            continue;
        }

        // On the path with no edges yet.
        std::memcpy(d, c, sizeof d);
        d[s] = kSingleton;
        bump(pack(d), up);

        // One edge to an open end.
        for (int i = 0; i < n_ends; ++i) {
            int t = ends[i];
            uint8_t e = c[t];
            std::memcpy(d, c, sizeof d);
            if (e == kSingleton) {
                d[t] = static_cast<uint8_t>(kEndPair0 + s);
                d[s] = static_cast<uint8_t>(kEndPair0 + t);
            } else if (e == kEndAnchor) {
                d[t] = kInterior;
                d[s] = kEndAnchor;
            } else {
                int x = e - kEndPair0;
                d[t] = kInterior;
                d[x] = static_cast<uint8_t>(kEndPair0 + s);
                d[s] = static_cast<uint8_t>(kEndPair0 + x);
            }
            bump(pack(d), up);
        }

        // Two edges: v is interior, joining two fragments.
        for (int i = 0; i < n_ends; ++i) {
            for (int i2 = i + 1; i2 < n_ends; ++i2) {
                int t1 = ends[i], t2 = ends[i2];
                uint8_t e1 = c[t1], e2 = c[t2];
                // Both ends of one fragment: joining them closes a cycle.
                if (e1 == kEndPair0 + t2 && e2 == kEndPair0 + t1) continue;
                if (e1 == kEndAnchor && e2 == kEndAnchor) continue;
                std::memcpy(d, c, sizeof d);
                bool anch = false;
                int other[2];
                int n_other = 0;
                for (int t : {t1, t2}) {
                    uint8_t e = d[t];
                    if (e == kSingleton) {
                        other[n_other++] = t;  // keeps its remaining open end
                    } else if (e == kEndAnchor) {
                        d[t] = kInterior;
                        anch = true;
                    } else {
                        other[n_other++] = e - kEndPair0;
                        d[t] = kInterior;
                    }
                }
                if (anch) {
                    d[other[0]] = kEndAnchor;
                } else {
                    d[other[0]] = static_cast<uint8_t>(kEndPair0 + other[1]);
                    d[other[1]] = static_cast<uint8_t>(kEndPair0 + other[0]);
                }
                d[s] = kInterior;
                bump(pack(d), up);
            }
        }
    }

    ProfileSet out;
    out.states.reserve(touched_.size());
    for (uint32_t k : touched_) out.states.emplace_back(k, val_[k]);
    std::sort(out.states.begin(), out.states.end());
    return out;
}

int BluePathDP::best_complete(const ProfileSet& in, int f) const {
    const int m = slots_;
    const int sf = f % m;
    int best = -1;
    for (const auto& [key, cnt] : in.states) {
        bool ok = ((key >> (4 * sf)) & 0xFu) == kEndAnchor;
        for (int t = 0; ok && t < m; ++t) {
            if (t == sf) continue;
            uint8_t code = (key >> (4 * t)) & 0xFu;
            ok = code == kAbsent || code == kInterior;
        }
        if (ok && cnt > best) best = cnt;
    }
    return best;
}

unsigned blue_mask_at(const std::vector<UpString>& ups, int power, int v) {
    unsigned mask = 0;
    for (int j = 1; j <= power && j <= v; ++j) {
        if (ups[v - j].color(j - 1) == Color::Blue) mask |= 1u << (j - 1);
    }
    return mask;
}

int BluePathDP::max_path(const std::vector<UpString>& ups, int anchor, int endpoint,
                         const std::vector<char>& forbidden) {
    if (anchor < 0 || endpoint < anchor) throw std::invalid_argument("bad anchor/endpoint");
    if (static_cast<int>(ups.size()) < endpoint) {
        throw std::invalid_argument("up-strings do not cover the endpoint");
    }
    auto banned = [&](int v) { return v < static_cast<int>(forbidden.size()) && forbidden[v]; };
    if (banned(anchor) || banned(endpoint)) return -1;

    ProfileSet cur = initial();
    for (int v = 0; v <= endpoint; ++v) {
        auto role = v == anchor ? VertexRole::Anchor
                  : banned(v)   ? VertexRole::Forbidden
                                : VertexRole::Free;
        cur = advance(cur, v, blue_mask_at(ups, power_, v), role);
        if (cur.empty()) return -1;
    }
    return best_complete(cur, endpoint);
}

std::vector<int> BluePathDP::lexmin_path(const std::vector<UpString>& ups, int endpoint,
                                         int target_count) {
    if (target_count < 2 || endpoint < 1) return {};
    auto blue = [&](int a, int b) {
        int lo = a < b ? a : b, hi = a < b ? b : a;
        return ups[lo].color(hi - lo - 1) == Color::Blue;
    };
    std::vector<int> path{0};
    std::vector<char> used(endpoint + 1, 0);
    used[0] = 1;
    int cur = 0;
    int t = 1;
    while (cur != endpoint) {
        bool committed = false;
        int lo = cur - power_ < 0 ? 0 : cur - power_;
        int hi = cur + power_ > endpoint ? endpoint : cur + power_;
        for (int w = lo; w <= hi && !committed; ++w) {
            if (w == cur || used[w] || !blue(cur, w)) continue;
            // Greedy step is valid iff the rest can still realize the target;
            // overshooting is impossible because target_count is the maximum.
            if (max_path(ups, w, endpoint, used) == target_count - t) {
                used[w] = 1;
                path.push_back(w);
                cur = w;
                ++t;
                committed = true;
            }
        }
        if (!committed) return {};
    }
    return t == target_count ? path : std::vector<int>{};
}

int max_blue_path(const std::vector<UpString>& ups, int power, int anchor, int endpoint,
                  const std::vector<char>& forbidden) {
    BluePathDP dp(power);
    return dp.max_path(ups, anchor, endpoint, forbidden);
}

std::vector<int> lexmin_blue_path(const std::vector<UpString>& ups, int power, int endpoint,
                                  int target_count) {
    BluePathDP dp(power);
    return dp.lexmin_path(ups, endpoint, target_count);
}

}  // namespace ramsey
