#include "monocross/coloring.hpp"

#include <algorithm>
#include <cmath>

#include "monocross/lower_bounds.hpp"
#include "monocross/rng.hpp"

namespace monocross {

std::string coloring_string(const Coloring& chi) {
    std::string s;
    s.reserve(chi.size());
    for (Color c : chi) s += (c == Color::Red ? 'R' : 'B');
    return s;
}

Coloring coloring_from_string(const std::string& s) {
    Coloring chi;
    chi.reserve(s.size());
    for (char c : s) {
        if (c == 'R')
            chi.push_back(Color::Red);
        else if (c == 'B')
            chi.push_back(Color::Blue);
        else
            throw std::invalid_argument(std::string("illegal color character '") + c + "'");
    }
    return chi;
}

long long mono_crossings(const IntersectionGraph& g, const Coloring& chi) {
    if (static_cast<int>(chi.size()) != g.n_edges)
        throw std::invalid_argument("coloring size does not match edge count");
    long long mono = 0;
    for (int e = 0; e < g.n_edges; ++e)
        for (int f : g.adjacency[e])
            if (f > e && chi[e] == chi[f]) ++mono;
    return mono;
}

long long mono_crossings(const Drawing& d, const Coloring& chi) {
    if (static_cast<int>(chi.size()) != d.edge_count())
        throw std::invalid_argument("coloring size does not match edge count");
    return mono_crossings(intersection_graph(d), chi);
}

ColoringResult random_coloring(const Drawing& d, uint64_t seed) {
    RandomSource rng(seed);
    ColoringResult res;
    res.method = SearchMethod::Random;
    res.seed = seed;
    res.coloring.resize(d.edge_count());
    for (auto& c : res.coloring) c = rng.coin() ? Color::Blue : Color::Red;
    res.mono_count = mono_crossings(d, res.coloring);
    return res;
}

namespace {

// Flip bookkeeping shared by local search and annealing: same[e] counts the
// neighbors of e in the intersection graph that currently share its color.
struct FlipEngine {
    explicit FlipEngine(const IntersectionGraph& graph) : g(graph) {}

    void reset(const Coloring& chi) {
        color = chi;
        same.assign(g.n_edges, 0);
        mono = 0;
        for (int e = 0; e < g.n_edges; ++e)
            for (int f : g.adjacency[e])
                if (color[e] == color[f]) {
                    ++same[e];
                    if (f > e) ++mono;
                }
    }

    long long flip_delta(int e) const { return g.degree(e) - 2LL * same[e]; }

    void flip(int e) {
        mono += flip_delta(e);
        color[e] = other(color[e]);
        for (int f : g.adjacency[e]) {
            if (color[f] == color[e])
                ++same[f];
            else
                --same[f];
        }
        same[e] = g.degree(e) - same[e];
    }

    // First-improvement sweeps until no single flip helps.
    void descend() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int e = 0; e < g.n_edges; ++e)
                if (flip_delta(e) < 0) {
                    flip(e);
                    changed = true;
                }
        }
    }

    const IntersectionGraph& g;
    Coloring color;
    std::vector<int> same;
    long long mono = 0;
};

Coloring random_colors(int n, RandomSource& rng) {
    Coloring chi(n);
    for (auto& c : chi) c = rng.coin() ? Color::Blue : Color::Red;
    return chi;
}

bool crossing_free(const IntersectionGraph& g) {
    for (const auto& adj : g.adjacency)
        if (!adj.empty()) return false;
    return true;
}

ColoringResult all_red_result(int n_edges, SearchMethod method, uint64_t seed) {
    ColoringResult res;
    res.coloring.assign(n_edges, Color::Red);
    res.mono_count = 0;
    res.method = method;
    res.seed = seed;
    return res;
}

}  // namespace

ColoringResult local_search(const IntersectionGraph& g, uint64_t seed, int restarts,
                            const Coloring* warm_start) {
    if (restarts < 1) restarts = 1;
    if (crossing_free(g)) return all_red_result(g.n_edges, SearchMethod::LocalSearch, seed);
    RandomSource rng(seed);
    FlipEngine engine(g);
    ColoringResult best;
    best.method = SearchMethod::LocalSearch;
    best.seed = seed;
    best.restarts_used = restarts;
    best.mono_count = -1;
    for (int r = 0; r < restarts; ++r) {
        if (r == 0 && warm_start != nullptr)
            engine.reset(*warm_start);
        else
            engine.reset(random_colors(g.n_edges, rng));
        engine.descend();
        if (best.mono_count < 0 || engine.mono < best.mono_count) {
            best.mono_count = engine.mono;
            best.coloring = engine.color;
        }
    }
    return best;
}

ColoringResult local_search(const Drawing& d, uint64_t seed, int restarts) {
    return local_search(intersection_graph(d), seed, restarts);
}

ColoringResult anneal(const IntersectionGraph& g, uint64_t seed,
                      const AnnealSchedule& schedule) {
    if (crossing_free(g)) return all_red_result(g.n_edges, SearchMethod::Annealing, seed);
    RandomSource rng(seed);
    FlipEngine engine(g);
    long long cr = g.crossing_count();
    double t0 = schedule.start_temp > 0 ? schedule.start_temp
                                        : std::max(1.0, static_cast<double>(cr) / 10.0);
    ColoringResult best;
    best.method = SearchMethod::Annealing;
    best.seed = seed;
    best.restarts_used = std::max(1, schedule.restarts);
    best.mono_count = -1;
    for (int r = 0; r < best.restarts_used; ++r) {
        engine.reset(random_colors(g.n_edges, rng));
        double temp = t0;
        for (int sweep = 0; sweep < schedule.max_sweeps && temp >= schedule.min_temp;
             ++sweep) {
            for (int e = 0; e < g.n_edges; ++e) {
                long long delta = engine.flip_delta(e);
                if (delta <= 0 || rng.unit() < std::exp(-static_cast<double>(delta) / temp))
                    engine.flip(e);
            }
            temp *= schedule.cooling;
        }
        engine.descend();
        if (best.mono_count < 0 || engine.mono < best.mono_count) {
            best.mono_count = engine.mono;
            best.coloring = engine.color;
        }
    }
    // never worse than plain local search from the same seed
    ColoringResult plain = local_search(g, seed, 1);
    if (plain.mono_count < best.mono_count) {
        best.coloring = plain.coloring;
        best.mono_count = plain.mono_count;
    }
    return best;
}

ColoringResult anneal(const Drawing& d, uint64_t seed, const AnnealSchedule& schedule) {
    return anneal(intersection_graph(d), seed, schedule);
}

namespace {

struct ExactSolver {
    const IntersectionGraph& g;
    uint64_t budget;
    std::vector<int> order;      // branch order, descending crossing degree
    std::vector<int> rank;       // vertex -> position in order, -1 if isolated
    std::vector<int8_t> color;   // -1 uncolored
    std::vector<int> cnt[2];     // colored neighbors per color
    long long lookahead = 0;     // sum over uncolored of min(cntR, cntB)
    long long mono = 0;
    long long incumbent;
    std::vector<int8_t> best_assignment;
    uint64_t nodes = 0;
    bool exhausted = false;
    long long min_skipped;

    // odd-cycle packing data over the residual (fully uncolored) subgraph
    std::vector<std::vector<int>> cycle_vertices;
    std::vector<std::vector<int>> cycle_crossings;
    std::vector<int> cycle_colored;  // colored vertices per cycle
    std::vector<std::vector<int>> cycles_of_vertex;
    std::vector<int> crossing_mark;
    int mark_epoch = 0;
    long long max_pack = 0;

    ExactSolver(const IntersectionGraph& graph, uint64_t node_budget,
                const ColoringResult& warm)
        : g(graph), budget(node_budget) {
        const int n = g.n_edges;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 0) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        rank.assign(n, -1);
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
        color.assign(n, -1);
        cnt[0].assign(n, 0);
        cnt[1].assign(n, 0);

        incumbent = warm.mono_count;
        best_assignment.resize(n);
        for (int v = 0; v < n; ++v)
            best_assignment[v] = static_cast<int8_t>(warm.coloring[v] == Color::Blue ? 1 : 0);
        min_skipped = incumbent;

        auto family = enumerate_odd_cycles(g, 5);
        CrossingIndexing();
        cycles_of_vertex.assign(n, {});
        for (const auto& cycle : family.cycles) {
            int id = static_cast<int>(cycle_vertices.size());
            std::vector<int> xs;
            for (std::size_t i = 0; i < cycle.size(); ++i)
                xs.push_back(crossing_id(cycle[i], cycle[(i + 1) % cycle.size()]));
            cycle_vertices.push_back(cycle);
            cycle_crossings.push_back(std::move(xs));
            for (int v : cycle) cycles_of_vertex[v].push_back(id);
        }
        cycle_colored.assign(cycle_vertices.size(), 0);
        crossing_mark.assign(n_crossings, 0);
        max_pack = packing_bound();
    }

    // canonical crossing index map
    std::vector<std::pair<int, int>> crossing_list;
    std::vector<std::vector<std::pair<int, int>>> crossing_lookup;  // per vertex: (nbr, id)
    int n_crossings = 0;
    void CrossingIndexing() {
        crossing_list = g.crossings();
        n_crossings = static_cast<int>(crossing_list.size());
        crossing_lookup.assign(g.n_edges, {});
        for (int i = 0; i < n_crossings; ++i) {
            auto [u, v] = crossing_list[i];
            crossing_lookup[u].emplace_back(v, i);
            crossing_lookup[v].emplace_back(u, i);
        }
        for (auto& l : crossing_lookup) std::sort(l.begin(), l.end());
    }
    int crossing_id(int u, int v) const {
        const auto& l = crossing_lookup[u];
        auto it = std::lower_bound(l.begin(), l.end(), std::pair<int, int>(v, -1));
        return it->second;
    }

    long long packing_bound() {
        ++mark_epoch;
        long long packed = 0;
        for (std::size_t c = 0; c < cycle_vertices.size(); ++c) {
            if (cycle_colored[c] != 0) continue;
            bool free = true;
            for (int x : cycle_crossings[c])
                if (crossing_mark[x] == mark_epoch) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int x : cycle_crossings[c]) crossing_mark[x] = mark_epoch;
            ++packed;
        }
        return packed;
    }

    void set_color(int v, int8_t c) {
        mono += cnt[c][v];
        lookahead -= std::min(cnt[0][v], cnt[1][v]);
        color[v] = c;
        for (int u : g.adjacency[v]) {
            if (color[u] == -1) {
                int before = std::min(cnt[0][u], cnt[1][u]);
                ++cnt[c][u];
                lookahead += std::min(cnt[0][u], cnt[1][u]) - before;
            } else {
                ++cnt[c][u];
            }
        }
        for (int cid : cycles_of_vertex[v]) ++cycle_colored[cid];
    }

    void unset_color(int v) {
        int8_t c = color[v];
        color[v] = -1;
        for (int u : g.adjacency[v]) {
            if (color[u] == -1) {
                int before = std::min(cnt[0][u], cnt[1][u]);
                --cnt[c][u];
                lookahead += std::min(cnt[0][u], cnt[1][u]) - before;
            } else {
                --cnt[c][u];
            }
        }
        mono -= cnt[c][v];
        lookahead += std::min(cnt[0][v], cnt[1][v]);
        for (int cid : cycles_of_vertex[v]) --cycle_colored[cid];
    }

    long long node_bound() {
        long long base = mono + lookahead;
        // the packing scan only pays off when it could reach the incumbent
        if (base + max_pack >= incumbent) return base + packing_bound();
        return base;
    }

    void record_incumbent() {
        incumbent = mono;
        for (int v = 0; v < g.n_edges; ++v)
            best_assignment[v] = color[v] == -1 ? int8_t(0) : color[v];
    }

    void search(std::size_t depth) {
        if (exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            min_skipped = std::min(min_skipped, mono + lookahead);
            return;
        }
        if (depth == order.size()) {
            if (mono < incumbent) record_incumbent();
            return;
        }
        if (node_bound() >= incumbent) return;
        int v = order[depth];
        int8_t first = cnt[0][v] <= cnt[1][v] ? 0 : 1;
        int branches = depth == 0 ? 1 : 2;  // color-swap symmetry
        for (int b = 0; b < branches; ++b) {
            int8_t c = b == 0 ? first : static_cast<int8_t>(1 - first);
            set_color(v, c);
            search(depth + 1);
            unset_color(v);
            if (exhausted) {
                if (b == 0 && branches == 2) {
                    set_color(v, static_cast<int8_t>(1 - first));
                    min_skipped = std::min(min_skipped, mono + lookahead);
                    unset_color(v);
                }
                return;
            }
        }
    }
};

}  // namespace

ExactCr2Result exact_cr2(const IntersectionGraph& g, uint64_t node_budget) {
    ExactCr2Result res;
    if (crossing_free(g)) {
        res.optimal = true;
        res.value = 0;
        res.lower_bound = 0;
        res.coloring.assign(g.n_edges, Color::Red);
        return res;
    }
    ColoringResult warm = local_search(g, 1, 24);
    ExactSolver solver(g, node_budget, warm);
    solver.search(0);
    res.nodes_used = solver.nodes;
    res.value = solver.incumbent;
    res.coloring.resize(g.n_edges);
    for (int v = 0; v < g.n_edges; ++v)
        res.coloring[v] = solver.best_assignment[v] ? Color::Blue : Color::Red;
    if (!solver.exhausted) {
        res.optimal = true;
        res.lower_bound = res.value;
    } else {
        res.optimal = false;
        res.lower_bound = std::max(0LL, std::min(solver.incumbent, solver.min_skipped));
    }
    return res;
}

ExactCr2Result exact_cr2(const Drawing& d, uint64_t node_budget) {
    return exact_cr2(intersection_graph(d), node_budget);
}

}  // namespace monocross
