#include "ramsey/pathpower.hpp"

#include <stdexcept>

namespace ramsey {

char color_to_char(Color c) { return c == Color::Blue ? 'B' : 'R'; }

Color color_from_char(char ch) {
    if (ch == 'B') return Color::Blue;
    if (ch == 'R') return Color::Red;
    throw std::invalid_argument(std::string("bad color character '") + ch + "'");
}

UpString::UpString(unsigned index, int len) {
    if (len < 0 || len > 8) throw std::invalid_argument("up-string length out of range");
    if (index >= (1u << len)) throw std::invalid_argument("up-string index out of range");
    bits_ = static_cast<uint8_t>(index);
    len_ = static_cast<uint8_t>(len);
}

Color UpString::color(int j) const {
    if (j < 0 || j >= len_) throw std::out_of_range("up-string position out of range");
    return static_cast<Color>((bits_ >> (len_ - 1 - j)) & 1u);
}

bool UpString::has_blue() const { return len_ > 0 && bits_ != (1u << len_) - 1u; }

std::string UpString::to_string() const {
    std::string s(len_, 'B');
    for (int j = 0; j < len_; ++j) s[j] = color_to_char(color(j));
    return s;
}

UpString UpString::parse(std::string_view s) {
    if (s.size() > 8) throw std::invalid_argument("up-string too long: " + std::string(s));
    unsigned bits = 0;
    for (char ch : s) {
        bits = (bits << 1) | (color_from_char(ch) == Color::Red ? 1u : 0u);
    }
    return UpString(bits, static_cast<int>(s.size()));
}

bool operator<(const UpString& a, const UpString& b) {
    int n = a.len_ < b.len_ ? a.len_ : b.len_;
    for (int j = 0; j < n; ++j) {
        Color ca = a.color(j), cb = b.color(j);
        if (ca != cb) return ca == Color::Blue;
    }
    return a.len_ < b.len_;
}

PowerPathGraph::PowerPathGraph(int n, int p) : n_vertices(n), power(p) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (p < 1) throw std::invalid_argument("power must be positive");
}

bool PowerPathGraph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices) {
        throw std::out_of_range("vertex out of range");
    }
    int d = u < v ? v - u : u - v;
    return d >= 1 && d <= power;
}

std::vector<int> PowerPathGraph::neighbors(int v) const {
    if (v < 0 || v >= n_vertices) throw std::out_of_range("vertex out of range");
    std::vector<int> out;
    int lo = v - power < 0 ? 0 : v - power;
    int hi = v + power >= n_vertices ? n_vertices - 1 : v + power;
    for (int u = lo; u <= hi; ++u) {
        if (u != v) out.push_back(u);
    }
    return out;
}

long long PowerPathGraph::edge_count() const {
    if (n_vertices < power + 1) {
        throw std::invalid_argument("edge_count formula needs n >= power+1");
    }
    long long p = power;
    return p * n_vertices - p * (p + 1) / 2;
}

int PowerPathGraph::up_length(int v) const {
    int rest = n_vertices - 1 - v;
    return rest < power ? rest : power;
}

UpColoring::UpColoring(PowerPathGraph g) : graph_(g) {}

UpColoring::UpColoring(PowerPathGraph g, std::vector<UpString> ups) : graph_(g), ups_(std::move(ups)) {
    if (static_cast<int>(ups_.size()) > graph_.n_vertices) {
        throw std::invalid_argument("more up-strings than vertices");
    }
    for (int v = 0; v < static_cast<int>(ups_.size()); ++v) {
        if (ups_[v].length() != graph_.up_length(v)) {
            throw std::invalid_argument("up-string length mismatch at vertex " + std::to_string(v));
        }
    }
}

const UpString& UpColoring::up(int v) const {
    if (v < 0 || v > frontier()) throw std::out_of_range("vertex above frontier");
    return ups_[v];
}

std::optional<Color> UpColoring::edge_color(int u, int v) const {
    if (!graph_.adjacent(u, v)) throw std::invalid_argument("edge_color on a non-edge");
    int lo = u < v ? u : v;
    int hi = u < v ? v : u;
    if (lo > frontier()) return std::nullopt;
    return ups_[lo].color(hi - lo - 1);
}

UpColoring UpColoring::extend(UpString s) const {
    int v = frontier() + 1;
    if (v >= graph_.n_vertices) throw std::out_of_range("extend beyond last vertex");
    if (s.length() != graph_.up_length(v)) {
        throw std::invalid_argument("up-string length mismatch at vertex " + std::to_string(v));
    }
    UpColoring out(*this);
    out.ups_.push_back(s);
    return out;
}

std::string UpColoring::serialize() const {
    std::string s;
    for (int v = 0; v < static_cast<int>(ups_.size()); ++v) {
        if (v) s += ',';
        s += ups_[v].to_string();
    }
    return s;
}

}  // namespace ramsey
