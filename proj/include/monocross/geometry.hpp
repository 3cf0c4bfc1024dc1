#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monocross/rational.hpp"

namespace monocross {

struct Point {
    Rational x;
    Rational y;
};

using Edge = std::pair<int, int>;  // vertex pair, first < second

// Sign of the signed area of the triangle (p, q, r):
// +1 counter-clockwise, -1 clockwise, 0 collinear. Exact.
int orientation(const Point& p, const Point& q, const Point& r);

class GeneralPositionError : public std::runtime_error {
public:
    GeneralPositionError(int a, int b, int c, const std::string& what)
        : std::runtime_error(what), indices{a, b, c} {}
    std::array<int, 3> indices;
};

// A straight-line drawing: labeled points in general position plus an edge
// set (all pairs for complete drawings). The edge list is kept sorted; the
// position of an edge in it is the canonical edge index used everywhere
// (colorings, file formats, LP variables). Immutable after construction.
class Drawing {
public:
    Drawing() = default;  // empty placeholder; real drawings come from the factories

    static Drawing complete(std::vector<Point> points);
    static Drawing with_edges(std::vector<Point> points, std::vector<Edge> edges);

    int size() const { return static_cast<int>(points_.size()); }
    const Point& point(int i) const { return points_.at(i); }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool complete_flag() const { return complete_; }

    // Canonical index of edge {u, v}; throws std::out_of_range if absent.
    int edge_index(int u, int v) const;
    // Edges incident to vertex v, ascending edge index.
    const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }

    // Exact orientation of the point triple (a, b, c) by vertex index.
    // Uses denominator-cleared integer coordinates cached at construction.
    int orientation3(int a, int b, int c) const;

    // Copy with one vertex removed (edges reindexed) or relocated.
    Drawing without_point(int v) const;
    Drawing with_point_moved(int v, Point p) const;

private:
    void finish();  // sorts/validates edges, checks general position, scales

    std::vector<Point> points_;
    std::vector<Edge> edges_;
    bool complete_ = false;
    std::vector<std::vector<int>> incident_;
    // coordinates with denominators cleared (global positive scaling)
    std::vector<std::array<BigInt, 2>> scaled_;
    bool small_ = false;  // scaled coordinates fit the int64 fast path
    std::vector<std::array<int64_t, 2>> scaled64_;
};

// True iff the open segments of edges e and f properly cross
// (shared endpoints never count). Four orientation tests.
bool segments_cross(const Drawing& d, int e, int f);

struct IntersectionGraph {
    int n_edges = 0;  // vertex count = edge count of the drawing
    std::vector<std::vector<int>> adjacency;  // sorted, symmetric, irreflexive

    int degree(int e) const { return static_cast<int>(adjacency[e].size()); }
    bool adjacent(int e, int f) const;
    // All crossings {e, f} with e < f in lexicographic order.  The position
    // of a pair in this list is the canonical crossing index.
    std::vector<std::pair<int, int>> crossings() const;
    long long crossing_count() const;
};

// All properly crossing edge pairs {e, f}, e < f, lexicographic order.
// The length of this list is cr(D).
std::vector<std::pair<int, int>> crossing_pairs(const Drawing& d);
long long crossing_count(const Drawing& d);
IntersectionGraph intersection_graph(const Drawing& d);

// True iff no point of {a, b, c, d} lies inside the triangle of the others.
bool in_convex_position(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace monocross
