#include "ramsey/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

void require_distinct(const std::vector<int>& vs, const char* what) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument(std::string(what) + ": repeated vertex");
    }
}

}  // namespace

Rational path_density(const std::vector<int>& vertices) {
    if (vertices.size() < 2) throw std::invalid_argument("path needs at least two vertices");
    if (vertices.front() != 0) throw std::invalid_argument("path not anchored at 0");
    require_distinct(vertices, "path");
    int maxv = *std::max_element(vertices.begin(), vertices.end());
    long long nonzero = static_cast<long long>(std::count_if(
        vertices.begin(), vertices.end(), [](int v) { return v != 0; }));
    return Rational(nonzero, maxv);
}

BluePathCert BluePathCert::from_vertices(std::vector<int> vs) {
    Rational d = path_density(vs);
    if (vs.back() != *std::max_element(vs.begin(), vs.end())) {
        throw std::invalid_argument("path endpoint is not the maximum vertex");
    }
    for (int v : vs) {
        if (v < 0) throw std::invalid_argument("negative vertex");
    }
    return BluePathCert{std::move(vs), d};
}

bool check_blue_path(const UpColoring& c, const BluePathCert& cert, const EndpointPredicate& end_pred) {
    // Recomputing from_vertices re-validates the shape and the density
    // arithmetic against the recorded value.
    BluePathCert fresh = BluePathCert::from_vertices(cert.vertices);
    for (int v : cert.vertices) {
        if (v > c.frontier()) throw std::out_of_range("certificate vertex above frontier");
    }
    if (fresh.density != cert.density) return false;
    const PowerPathGraph& g = c.graph();
    for (size_t i = 0; i + 1 < cert.vertices.size(); ++i) {
        int u = cert.vertices[i], v = cert.vertices[i + 1];
        if (!g.adjacent(u, v)) return false;
        if (c.edge_color(u, v) != Color::Blue) return false;
    }
    return end_pred.matches(c.up(cert.endpoint()));
}

bool check_red_cycle(const UpColoring& c, const RedCycleCert& cert, int cycle_cap) {
    int m = cert.length();
    if (m < 3 || m > cycle_cap) return false;
    std::vector<int> sorted = cert.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    const PowerPathGraph& g = c.graph();
    for (int i = 0; i < m; ++i) {
        int u = cert.vertices[i], v = cert.vertices[(i + 1) % m];
        if (u < 0 || v < 0 || u >= g.n_vertices || v >= g.n_vertices || !g.adjacent(u, v)) {
            throw std::invalid_argument("cycle step is not an edge");
        }
        std::optional<Color> col = c.edge_color(u, v);
        if (!col.has_value()) throw std::out_of_range("cycle edge not yet determined");
        if (*col != Color::Red) return false;
    }
    return true;
}

BluePathCert stitch(const BluePathCert& a, const BluePathCert& b) {
    // Re-validate both inputs; stitch is only defined on well-formed certs.
    BluePathCert va = BluePathCert::from_vertices(a.vertices);
    BluePathCert vb = BluePathCert::from_vertices(b.vertices);
    if (va.density != a.density || vb.density != b.density) {
        throw std::invalid_argument("stitch input carries a wrong density");
    }
    int k = va.endpoint();
    std::vector<int> joined = va.vertices;
    for (size_t i = 1; i < vb.vertices.size(); ++i) joined.push_back(vb.vertices[i] + k);
    return BluePathCert::from_vertices(std::move(joined));
}

}  // namespace ramsey
