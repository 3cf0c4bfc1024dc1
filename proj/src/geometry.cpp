#include "monocross/geometry.hpp"

#include <algorithm>
#include <limits>

namespace monocross {

namespace {

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

int sign_of(const BigInt& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
    Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign_of(det);
}

Drawing Drawing::complete(std::vector<Point> points) {
    Drawing d;
    d.points_ = std::move(points);
    int n = d.size();
    d.edges_.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.edges_.emplace_back(i, j);
    d.complete_ = true;
    d.finish();
    return d;
}

Drawing Drawing::with_edges(std::vector<Point> points, std::vector<Edge> edges) {
    Drawing d;
    d.points_ = std::move(points);
    int n = d.size();
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::out_of_range("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    d.edges_ = std::move(edges);
    d.complete_ = d.edge_count() == n * (n - 1) / 2;
    d.finish();
    return d;
}

void Drawing::finish() {
    int n = size();
    if (n < 1) throw std::invalid_argument("drawing needs at least one point");

    // clear denominators: multiply every coordinate by the global LCM
    BigInt lcm = 1;
    for (const auto& p : points_) {
        lcm = boost::multiprecision::lcm(lcm, denominator(p.x));
        lcm = boost::multiprecision::lcm(lcm, denominator(p.y));
    }
    scaled_.resize(n);
    for (int i = 0; i < n; ++i) {
        scaled_[i][0] = numerator(points_[i].x) * (lcm / denominator(points_[i].x));
        scaled_[i][1] = numerator(points_[i].y) * (lcm / denominator(points_[i].y));
    }
    const BigInt cap = BigInt(1) << 30;
    small_ = true;
    for (const auto& c : scaled_)
        if (abs(c[0]) > cap || abs(c[1]) > cap) {
            small_ = false;
            break;
        }
    if (small_) {
        scaled64_.resize(n);
        for (int i = 0; i < n; ++i)
            scaled64_[i] = {static_cast<int64_t>(scaled_[i][0]),
                            static_cast<int64_t>(scaled_[i][1])};
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (scaled_[i] == scaled_[j])
                throw GeneralPositionError(i, j, j, "coincident points " + std::to_string(i) +
                                                        " and " + std::to_string(j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation3(i, j, k) == 0)
                    throw GeneralPositionError(
                        i, j, k,
                        "collinear points " + std::to_string(i) + ", " + std::to_string(j) +
                            ", " + std::to_string(k));

    incident_.assign(n, {});
    for (int e = 0; e < edge_count(); ++e) {
        incident_[edges_[e].first].push_back(e);
        incident_[edges_[e].second].push_back(e);
    }
}

int Drawing::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
        throw std::out_of_range("no such edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
    return static_cast<int>(it - edges_.begin());
}

int Drawing::orientation3(int a, int b, int c) const {
    if (small_) {
        const auto& pa = scaled64_[a];
        const auto& pb = scaled64_[b];
        const auto& pc = scaled64_[c];
        __int128 det = static_cast<__int128>(pb[0] - pa[0]) * (pc[1] - pa[1]) -
                       static_cast<__int128>(pb[1] - pa[1]) * (pc[0] - pa[0]);
        return det > 0 ? 1 : det < 0 ? -1 : 0;
    }
    const auto& pa = scaled_[a];
    const auto& pb = scaled_[b];
    const auto& pc = scaled_[c];
    BigInt det = (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0]);
    return sign_of(det);
}

Drawing Drawing::without_point(int v) const {
    std::vector<Point> pts;
    pts.reserve(size() - 1);
    for (int i = 0; i < size(); ++i)
        if (i != v) pts.push_back(points_[i]);
    if (complete_) return Drawing::complete(std::move(pts));
    std::vector<Edge> edges;
    for (const auto& [a, b] : edges_) {
        if (a == v || b == v) continue;
        edges.emplace_back(a - (a > v), b - (b > v));
    }
    return Drawing::with_edges(std::move(pts), std::move(edges));
}

Drawing Drawing::with_point_moved(int v, Point p) const {
    std::vector<Point> pts = points_;
    pts.at(v) = std::move(p);
    if (complete_) return Drawing::complete(std::move(pts));
    return Drawing::with_edges(std::move(pts), edges_);
}

bool segments_cross(const Drawing& d, int e, int f) {
    const auto& [a, b] = d.edges().at(e);
    const auto& [c, g] = d.edges().at(f);
    if (a == c || a == g || b == c || b == g) return false;
    return d.orientation3(a, b, c) != d.orientation3(a, b, g) &&
           d.orientation3(c, g, a) != d.orientation3(c, g, b);
}

namespace {

// Per-edge side table: side[e][v] = orientation of v against edge e's line.
// Crossing tests become O(1) lookups; total cost O(E*n + E^2).
struct SideTable {
    explicit SideTable(const Drawing& d) : n(d.size()), sides(static_cast<std::size_t>(d.edge_count()) * d.size()) {
        for (int e = 0; e < d.edge_count(); ++e) {
            auto [a, b] = d.edges()[e];
            for (int v = 0; v < n; ++v)
                sides[static_cast<std::size_t>(e) * n + v] =
                    static_cast<int8_t>(d.orientation3(a, b, v));
        }
    }
    int8_t side(int e, int v) const { return sides[static_cast<std::size_t>(e) * n + v]; }
    bool cross(const Drawing& d, int e, int f) const {
        auto [a, b] = d.edges()[e];
        auto [c, g] = d.edges()[f];
        if (a == c || a == g || b == c || b == g) return false;
        return side(e, c) != side(e, g) && side(f, a) != side(f, b);
    }
    int n;
    std::vector<int8_t> sides;
};

}  // namespace

std::vector<std::pair<int, int>> crossing_pairs(const Drawing& d) {
    SideTable t(d);
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < d.edge_count(); ++e)
        for (int f = e + 1; f < d.edge_count(); ++f)
            if (t.cross(d, e, f)) out.emplace_back(e, f);
    return out;
}

long long crossing_count(const Drawing& d) {
    SideTable t(d);
    long long count = 0;
    for (int e = 0; e < d.edge_count(); ++e)
        for (int f = e + 1; f < d.edge_count(); ++f)
            if (t.cross(d, e, f)) ++count;
    return count;
}

IntersectionGraph intersection_graph(const Drawing& d) {
    SideTable t(d);
    IntersectionGraph g;
    g.n_edges = d.edge_count();
    g.adjacency.assign(g.n_edges, {});
    for (int e = 0; e < d.edge_count(); ++e)
        for (int f = e + 1; f < d.edge_count(); ++f)
            if (t.cross(d, e, f)) {
                g.adjacency[e].push_back(f);
                g.adjacency[f].push_back(e);
            }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

bool IntersectionGraph::adjacent(int e, int f) const {
    const auto& adj = adjacency[e];
    return std::binary_search(adj.begin(), adj.end(), f);
}

std::vector<std::pair<int, int>> IntersectionGraph::crossings() const {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < n_edges; ++e)
        for (int f : adjacency[e])
            if (f > e) out.emplace_back(e, f);
    return out;
}

long long IntersectionGraph::crossing_count() const {
    long long deg_sum = 0;
    for (const auto& adj : adjacency) deg_sum += static_cast<long long>(adj.size());
    return deg_sum / 2;
}

bool in_convex_position(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Point* pts[4] = {&a, &b, &c, &d};
    auto inside = [&](int i, int j, int k, int l) {
        int s1 = orientation(*pts[j], *pts[k], *pts[i]);
        int s2 = orientation(*pts[k], *pts[l], *pts[i]);
        int s3 = orientation(*pts[l], *pts[j], *pts[i]);
        return s1 == s2 && s2 == s3;
    };
    return !inside(0, 1, 2, 3) && !inside(1, 0, 2, 3) && !inside(2, 0, 1, 3) &&
           !inside(3, 0, 1, 2);
}

}  // namespace monocross
