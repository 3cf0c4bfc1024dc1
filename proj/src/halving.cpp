#include "monocross/halving.hpp"

#include <algorithm>

namespace monocross {

LargerClass larger_class_at(const Drawing& d, const Coloring& chi, int p) {
    if (static_cast<int>(chi.size()) != d.edge_count())
        throw std::invalid_argument("coloring size does not match edge count");
    int red = 0, blue = 0;
    for (int e : d.incident_edges(p)) (chi[e] == Color::Red ? red : blue)++;
    if (red == blue) throw TieAtPointError(p);
    LargerClass out;
    out.cls = red > blue ? Color::Red : Color::Blue;
    out.larger = std::max(red, blue);
    out.smaller = std::min(red, blue);
    return out;
}

HalvingCheck halving_side_counts(const Drawing& d, const Coloring& chi, int p, int e) {
    const auto& [a, b] = d.edges().at(e);
    if (a != p && b != p)
        throw std::invalid_argument("edge " + std::to_string(e) + " is not incident to point " +
                                    std::to_string(p));
    int q = a == p ? b : a;
    Color large = larger_class_at(d, chi, p).cls;
    HalvingCheck out;
    for (int f : d.incident_edges(p)) {
        if (f == e) continue;
        const auto& [u, v] = d.edges()[f];
        int r = u == p ? v : u;
        // left of the line through e directed q -> p
        bool left = d.orientation3(q, p, r) > 0;
        if (chi[f] == large)
            (left ? out.counts.large_left : out.counts.large_right)++;
        else
            (left ? out.counts.small_left : out.counts.small_right)++;
    }
    out.halving = std::abs(out.counts.large_left - out.counts.large_right) <= 1;
    return out;
}

bool is_halving_edge(const Drawing& d, const Coloring& chi, int p, int e) {
    return halving_side_counts(d, chi, p, e).halving;
}

namespace {

// Kuhn's augmenting-path matching on the point -> candidate-edge graph.
struct Matcher {
    const std::vector<std::vector<int>>& candidates;  // per point, ascending
    std::vector<int> edge_owner;   // edge index -> point or -1
    std::vector<int> point_match;  // point -> edge or -1
    std::vector<char> fixed;       // points whose assignment may not change
    std::vector<char> visited;

    Matcher(const std::vector<std::vector<int>>& cand, int n_edges)
        : candidates(cand), edge_owner(n_edges, -1),
          point_match(cand.size(), -1), fixed(cand.size(), 0), visited(cand.size(), 0) {}

    bool augment(int p) {
        visited[p] = 1;
        for (int e : candidates[p]) {
            int owner = edge_owner[e];
            if (owner == p) continue;
            if (owner == -1 || (!fixed[owner] && !visited[owner] && augment(owner))) {
                edge_owner[e] = p;
                point_match[p] = e;
                return true;
            }
        }
        return false;
    }

    int run() {
        int matched = 0;
        for (std::size_t p = 0; p < candidates.size(); ++p) {
            std::fill(visited.begin(), visited.end(), 0);
            if (augment(static_cast<int>(p))) ++matched;
        }
        return matched;
    }

    // Try to re-route so that p is matched to e; rolls back on failure.
    bool force(int p, int e) {
        if (point_match[p] == e) return true;
        int old_edge = point_match[p];
        int displaced = edge_owner[e];
        if (displaced != -1 && fixed[displaced]) return false;
        edge_owner[old_edge] = -1;
        point_match[p] = e;
        edge_owner[e] = p;
        if (displaced == -1) return true;
        point_match[displaced] = -1;
        std::fill(visited.begin(), visited.end(), 0);
        visited[p] = 1;  // p's new assignment must stay put
        if (augment(displaced)) return true;
        point_match[displaced] = e;
        edge_owner[e] = displaced;
        point_match[p] = old_edge;
        edge_owner[old_edge] = p;
        return false;
    }
};

}  // namespace

MatchingSearch find_halving_matching(const Drawing& d, const Coloring& chi) {
    const int n = d.size();
    if (n % 2 != 0) throw OddCardinalityError();
    std::vector<std::vector<int>> candidates(n);
    for (int p = 0; p < n; ++p)
        for (int e : d.incident_edges(p))
            if (is_halving_edge(d, chi, p, e)) candidates[p].push_back(e);

    Matcher matcher(candidates, d.edge_count());
    MatchingSearch out;
    out.max_matched = matcher.run();
    if (out.max_matched < n) return out;

    // lexicographically least by (point index, edge index)
    for (int p = 0; p < n; ++p) {
        for (int e : candidates[p]) {
            if (e > matcher.point_match[p]) break;
            if (matcher.force(p, e)) break;
        }
        matcher.fixed[p] = 1;
    }
    out.found = true;
    out.matching.match = matcher.point_match;
    return out;
}

bool verify_halving_matching(const Drawing& d, const Coloring& chi,
                             const HalvingMatching& m) {
    if (static_cast<int>(m.match.size()) != d.size()) return false;
    std::vector<char> used(d.edge_count(), 0);
    for (int p = 0; p < d.size(); ++p) {
        int e = m.match[p];
        if (e < 0 || e >= d.edge_count() || used[e]) return false;
        used[e] = 1;
        const auto& [a, b] = d.edges()[e];
        if (a != p && b != p) return false;
        if (!is_halving_edge(d, chi, p, e)) return false;
    }
    return true;
}

}  // namespace monocross
