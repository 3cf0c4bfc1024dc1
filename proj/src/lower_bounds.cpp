#include "monocross/lower_bounds.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace monocross {

namespace {

struct CrossingIndex {
    explicit CrossingIndex(const IntersectionGraph& g)
        : list(g.crossings()), n(g.n_edges) {
        map.reserve(list.size() * 2);
        for (std::size_t i = 0; i < list.size(); ++i) map[key(list[i])] = static_cast<int>(i);
    }
    uint64_t key(std::pair<int, int> c) const {
        return static_cast<uint64_t>(c.first) * static_cast<uint64_t>(n) + c.second;
    }
    int index(int u, int v) const {
        if (u > v) std::swap(u, v);
        return map.at(key({u, v}));
    }
    std::vector<int> cycle_vars(const std::vector<int>& cycle) const {
        std::vector<int> vars;
        vars.reserve(cycle.size());
        for (std::size_t i = 0; i < cycle.size(); ++i)
            vars.push_back(index(cycle[i], cycle[(i + 1) % cycle.size()]));
        std::sort(vars.begin(), vars.end());
        return vars;
    }
    std::vector<std::pair<int, int>> list;
    int n;
    std::unordered_map<uint64_t, int> map;
};

std::vector<std::vector<int>> sorted_by_length(const OddCycleFamily& family) {
    std::vector<std::vector<int>> cycles = family.cycles;
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return cycles;
}

}  // namespace

OddCycleFamily enumerate_odd_cycles(const IntersectionGraph& g, int max_len) {
    if (max_len < 3 || max_len % 2 == 0)
        throw std::invalid_argument("max cycle length must be an odd number >= 3");
    const int n = g.n_edges;
    OddCycleFamily family;
    std::vector<char> in_path(n, 0);
    std::vector<int> path;

    // Chordless cycles with minimum vertex s: every interior vertex may touch
    // the path only at its predecessor, and may touch s only when closing.
    auto dfs = [&](auto&& self, int s) -> void {
        int last = path.back();
        for (int w : g.adjacency[last]) {
            if (w <= s || in_path[w]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.adjacent(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            bool closes = g.adjacent(w, s);
            if (closes && path.size() >= 2) {
                if (static_cast<int>(path.size() + 1) % 2 == 1 && path[1] < w) {
                    auto cycle = path;
                    cycle.push_back(w);
                    family.cycles.push_back(std::move(cycle));
                }
                continue;  // extending past w would leave the chord (w, s)
            }
            if (path.size() + 1 >= static_cast<std::size_t>(max_len)) continue;
            if (closes) continue;
            in_path[w] = 1;
            path.push_back(w);
            self(self, s);
            path.pop_back();
            in_path[w] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        in_path.assign(n, 0);
        in_path[s] = 1;
        for (int v : g.adjacency[s]) {
            if (v <= s) continue;
            path = {s, v};
            in_path[v] = 1;
            dfs(dfs, s);
            in_path[v] = 0;
        }
    }
    return family;
}

LowerBoundCertificate cycle_packing_bound(const IntersectionGraph& g,
                                          const OddCycleFamily& family) {
    CrossingIndex cx(g);
    std::vector<char> used(cx.list.size(), 0);
    LowerBoundCertificate cert;
    cert.kind = BoundKind::Packing;
    for (const auto& cycle : sorted_by_length(family)) {
        auto vars = cx.cycle_vars(cycle);
        bool free = true;
        for (int v : vars)
            if (used[v]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (int v : vars) used[v] = 1;
        cert.witness.push_back(cycle);
    }
    cert.value = static_cast<long long>(cert.witness.size());
    return cert;
}

namespace {

// Branch and bound for the 0/1 covering program. Unit rows are propagated,
// the relaxation is a greedy packing of var-disjoint uncovered rows (the
// integral member of the fractional dual family), and dominated rows are
// dropped up front.
struct CoverSolver {
    int n_vars;
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> rows_of_var;
    std::vector<int> row_order;    // by ascending size, for the greedy bound
    std::vector<int8_t> fixed;     // -1 free, 0, 1
    std::vector<char> covered;
    std::vector<int> free_count;   // free vars per row
    std::vector<int> var_epoch;
    int epoch = 0;
    uint64_t budget;
    uint64_t nodes = 0;
    bool exhausted = false;
    long long incumbent;
    long long min_skipped;  // min bound over unexplored subtrees

    struct Change {
        int var;
        std::vector<int> newly_covered;
    };

    CoverSolver(int vars, std::vector<std::vector<int>> constraints, uint64_t node_budget)
        : n_vars(vars), rows(drop_dominated(std::move(constraints))), fixed(vars, -1),
          covered(rows.size(), 0), free_count(rows.size()), var_epoch(vars, 0),
          budget(node_budget) {
        rows_of_var.assign(n_vars, {});
        for (std::size_t r = 0; r < rows.size(); ++r) {
            free_count[r] = static_cast<int>(rows[r].size());
            for (int v : rows[r]) rows_of_var[v].push_back(static_cast<int>(r));
        }
        row_order.resize(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) row_order[r] = static_cast<int>(r);
        std::sort(row_order.begin(), row_order.end(), [&](int a, int b) {
            if (rows[a].size() != rows[b].size()) return rows[a].size() < rows[b].size();
            return rows[a] < rows[b];
        });
        incumbent = greedy_cover();
        min_skipped = incumbent;
    }

    // a row containing another row is implied by it
    static std::vector<std::vector<int>> drop_dominated(std::vector<std::vector<int>> in) {
        std::sort(in.begin(), in.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        in.erase(std::unique(in.begin(), in.end()), in.end());
        std::vector<std::vector<int>> kept;
        for (auto& row : in) {
            bool dominated = false;
            for (const auto& small : kept) {
                if (small.size() >= row.size()) continue;
                if (std::includes(row.begin(), row.end(), small.begin(), small.end())) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(std::move(row));
        }
        return kept;
    }

    long long greedy_cover() {
        std::vector<char> done(rows.size(), 0);
        std::vector<int> hits(n_vars, 0);
        long long count = 0;
        std::size_t remaining = rows.size();
        while (remaining > 0) {
            std::fill(hits.begin(), hits.end(), 0);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (!done[r])
                    for (int v : rows[r]) ++hits[v];
            int best = static_cast<int>(std::max_element(hits.begin(), hits.end()) - hits.begin());
            ++count;
            for (int r : rows_of_var[best])
                if (!done[r]) {
                    done[r] = 1;
                    --remaining;
                }
        }
        return count;
    }

    void assign(int v, int8_t val, Change& change) {
        change.var = v;
        fixed[v] = val;
        for (int r : rows_of_var[v]) {
            --free_count[r];
            if (val == 1 && !covered[r]) {
                covered[r] = 1;
                change.newly_covered.push_back(r);
            }
        }
    }

    void undo(const Change& change) {
        for (int r : rows_of_var[change.var]) ++free_count[r];
        for (int r : change.newly_covered) covered[r] = 0;
        fixed[change.var] = -1;
    }

    // forces variables of uncovered unit rows; returns false on a conflict
    bool propagate(std::vector<Change>& trail, long long& ones) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (covered[r]) continue;
                if (free_count[r] == 0) return false;
                if (free_count[r] == 1) {
                    int forced = -1;
                    for (int v : rows[r])
                        if (fixed[v] == -1) forced = v;
                    trail.emplace_back();
                    assign(forced, 1, trail.back());
                    ++ones;
                    progress = true;
                }
            }
        }
        return true;
    }

    // ones + packing of var-disjoint uncovered rows; -1 when infeasible
    long long node_bound(long long ones) {
        ++epoch;
        long long packed = 0;
        for (int r : row_order) {
            if (covered[r]) continue;
            if (free_count[r] == 0) return -1;
            bool free = true;
            for (int v : rows[r])
                if (fixed[v] == -1 && var_epoch[v] == epoch) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int v : rows[r])
                if (fixed[v] == -1) var_epoch[v] = epoch;
            ++packed;
        }
        return ones + packed;
    }

    int pick_var() {
        std::vector<int> score(n_vars, 0);
        int best = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (covered[r]) continue;
            for (int v : rows[r])
                if (fixed[v] == -1 && (++score[v] > (best == -1 ? 0 : score[best]) ||
                                       best == -1))
                    best = v;
        }
        return best;
    }

    void solve(long long ones) {
        if (exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            long long b = node_bound(ones);
            if (b >= 0) min_skipped = std::min(min_skipped, b);
            return;
        }
        std::vector<Change> trail;
        long long forced_ones = ones;
        bool feasible = propagate(trail, forced_ones);
        long long bound = feasible ? node_bound(forced_ones) : -1;
        if (feasible && bound < incumbent) {
            bool all = true;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (!covered[r]) {
                    all = false;
                    break;
                }
            if (all) {
                incumbent = std::min(incumbent, forced_ones);
            } else {
                int v = pick_var();
                for (int8_t val : {int8_t(1), int8_t(0)}) {
                    Change change;
                    assign(v, val, change);
                    solve(forced_ones + (val == 1 ? 1 : 0));
                    undo(change);
                    if (exhausted) {
                        if (val == 1) {
                            Change other;
                            assign(v, 0, other);
                            long long b = node_bound(forced_ones);
                            if (b >= 0) min_skipped = std::min(min_skipped, b);
                            undo(other);
                        }
                        break;
                    }
                }
            }
        }
        while (!trail.empty()) {
            undo(trail.back());
            trail.pop_back();
        }
    }
};

}  // namespace

LowerBoundCertificate solve_covering_ilp(const IntersectionGraph& g,
                                         const OddCycleFamily& family,
                                         uint64_t node_budget) {
    LowerBoundCertificate cert;
    cert.witness = family.cycles;
    if (family.empty()) {
        cert.value = 0;
        cert.kind = BoundKind::Ilp;  // no constraints: optimum is 0
        return cert;
    }
    CrossingIndex cx(g);
    std::vector<std::vector<int>> rows;
    rows.reserve(family.size());
    for (const auto& cycle : sorted_by_length(family)) rows.push_back(cx.cycle_vars(cycle));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    CoverSolver solver(static_cast<int>(cx.list.size()), std::move(rows), node_budget);
    solver.solve(0);
    if (!solver.exhausted) {
        cert.value = solver.incumbent;
        cert.kind = BoundKind::Ilp;
    } else {
        long long proven = std::min(solver.incumbent, solver.min_skipped);
        long long floor = cycle_packing_bound(g, family).value;
        cert.value = std::max(proven, floor);
        cert.kind = BoundKind::LpRelaxation;
        cert.exhausted_budget = true;
    }
    return cert;
}

void export_covering_ilp(const IntersectionGraph& g, const OddCycleFamily& family,
                         const std::string& path) {
    if (family.empty()) throw EmptyFamilyError();
    CrossingIndex cx(g);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "Minimize\n";
    out << "obj:";
    for (std::size_t i = 0; i < cx.list.size(); ++i)
        out << (i == 0 ? " " : " + ") << "x" << i;
    out << "\n";
    out << "Subject To\n";
    std::size_t k = 0;
    for (const auto& cycle : sorted_by_length(family)) {
        auto vars = cx.cycle_vars(cycle);
        out << "c" << k++ << ":";
        for (std::size_t i = 0; i < vars.size(); ++i)
            out << (i == 0 ? " " : " + ") << "x" << vars[i];
        out << " >= 1\n";
    }
    out << "Binary\n";
    for (std::size_t i = 0; i < cx.list.size(); ++i) out << "x" << i << "\n";
    out << "End\n";
    if (!out) throw std::runtime_error("write failure on '" + path + "'");
}

LpProgram parse_covering_lp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    LpProgram prog;
    std::string line;
    enum { None, Objective, Constraints, Binaries } section = None;
    auto vars_of = [](const std::string& text) {
        std::vector<int> vars;
        std::istringstream ss(text);
        std::string tok;
        while (ss >> tok) {
            if (tok == "+" || tok == ">=" || tok == "1") continue;
            if (tok.size() < 2 || tok[0] != 'x')
                throw std::runtime_error("bad LP token '" + tok + "'");
            vars.push_back(std::stoi(tok.substr(1)));
        }
        return vars;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line == "Minimize") continue;
        if (line == "Subject To") {
            section = Constraints;
            continue;
        }
        if (line == "Binary") {
            section = Binaries;
            continue;
        }
        if (line == "End") break;
        if (line.rfind("obj:", 0) == 0) {
            section = Objective;
            prog.n_vars = static_cast<int>(vars_of(line.substr(4)).size());
            continue;
        }
        if (section == Constraints) {
            auto colon = line.find(':');
            if (colon == std::string::npos) throw std::runtime_error("bad LP row: " + line);
            auto vars = vars_of(line.substr(colon + 1));
            std::sort(vars.begin(), vars.end());
            prog.constraints.push_back(std::move(vars));
        }
    }
    return prog;
}

Rational lemma1_constant(int m, const BigInt& c_hat) {
    if (m < 4) throw std::invalid_argument("lemma requires m >= 4");
    if (c_hat < 0) throw std::invalid_argument("crossing count must be >= 0");
    BigInt den = BigInt(m) * (m - 1) * (m - 2) * (m - 3);
    return Rational(24 * c_hat, den);
}

Rational lemma1_bound(int m, const BigInt& c_hat, const BigInt& n) {
    if (n <= m) throw std::invalid_argument("lemma requires n > m");
    return lemma1_constant(m, c_hat) * Rational(binomial(n, 4));
}

CrossingLemmaBound crossing_lemma_constant() {
    CrossingLemmaBound b;
    b.value = Rational(24, 29 * 32);  // reduces to 3/116
    b.derivation = {
        "split the C(n,2) edges of K_n into two color classes of ~n^2/4 edges each",
        "crossing lemma (improved constant): cr(G) >= e^3 / (29 n^2) for e > 7n",
        "per class: (n^2/4)^3 / (29 n^2) = n^4 / (29*64); two classes give n^4 / (29*32)",
        "normalize by C(n,4) ~ n^4/24: constant 24/(29*32) = 3/116 > 1/39",
    };
    return b;
}

}  // namespace monocross
