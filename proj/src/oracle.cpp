#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

namespace sc {

namespace {

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// Greedy clique: seed at each vertex in degree order, extend by degree.
std::vector<uint32_t> greedy_clique(const std::vector<std::vector<uint32_t>>& adj) {
    size_t n = adj.size();
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return adj[a].size() > adj[b].size(); });
    std::vector<uint32_t> best;
    size_t tries = std::min<size_t>(n, 32);
    for (size_t s = 0; s < tries; ++s) {
        std::vector<uint32_t> clique{order[s]};
        for (uint32_t v : order) {
            bool ok = true;
            for (uint32_t c : clique) {
                if (v == c || !std::binary_search(adj[c].begin(), adj[c].end(), v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) clique.push_back(v);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

int dsatur_upper(const std::vector<std::vector<uint32_t>>& adj, Coloring& out) {
    size_t n = adj.size();
    out.assign(n, -1);
    std::vector<std::vector<bool>> sat(n);
    std::vector<int> satdeg(n, 0);
    int used = 0;
    for (size_t step = 0; step < n; ++step) {
        int best = -1;
        for (size_t v = 0; v < n; ++v) {
            if (out[v] >= 0) continue;
            if (best < 0 || satdeg[v] > satdeg[best] ||
                (satdeg[v] == satdeg[best] && adj[v].size() > adj[best].size()))
                best = static_cast<int>(v);
        }
        std::vector<bool> taken(used + 1, false);
        for (uint32_t u : adj[best])
            if (out[u] >= 0) taken[out[u]] = true;
        int c = 0;
        while (c < used && taken[c]) ++c;
        out[best] = c;
        used = std::max(used, c + 1);
        for (uint32_t u : adj[best]) {
            if (out[u] >= 0) continue;
            if (sat[u].empty()) sat[u].assign(adj.size() + 1, false);
            if (!sat[u][c]) {
                sat[u][c] = true;
                ++satdeg[u];
            }
        }
    }
    return used;
}

// Exhaustive k-colorability with saturation branching. Returns SAT/UNSAT, or
// Unknown if the node budget is hit.
struct KSearch {
    const std::vector<std::vector<uint32_t>>& adj;
    int k;
    uint64_t budget;
    uint64_t nodes = 0;
    bool out_of_budget = false;
    Coloring color;

    explicit KSearch(const std::vector<std::vector<uint32_t>>& a, int kk, uint64_t b)
        : adj(a), k(kk), budget(b), color(a.size(), -1) {}

    bool run(const std::vector<uint32_t>& precolored) {
        int used = 0;
        for (size_t i = 0; i < precolored.size(); ++i) {
            color[precolored[i]] = static_cast<int>(i);
            used = static_cast<int>(i) + 1;
        }
        return recurse(used);
    }

    bool recurse(int used) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        // Most saturated uncolored vertex, ties by degree then id.
        int pick = -1;
        int pick_sat = -1;
        std::vector<bool> taken(k, false);
        for (size_t v = 0; v < adj.size(); ++v) {
            if (color[v] >= 0) continue;
            int s = 0;
            std::vector<bool> local(k, false);
            for (uint32_t u : adj[v])
                if (color[u] >= 0 && !local[color[u]]) {
                    local[color[u]] = true;
                    ++s;
                }
            if (s == k) return false;  // dead vertex
            if (pick < 0 || s > pick_sat ||
                (s == pick_sat && adj[v].size() > adj[pick].size())) {
                pick = static_cast<int>(v);
                pick_sat = s;
                taken = local;
            }
        }
        if (pick < 0) return true;  // all colored
        // Colors in order; allow at most one fresh color (symmetry).
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (taken[c]) continue;
            color[pick] = c;
            if (recurse(std::max(used, c + 1))) return true;
            color[pick] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

OracleResult exact_chromatic_number(const std::vector<std::vector<uint32_t>>& adj,
                                    uint64_t node_budget) {
    Clock clock;
    OracleResult res;
    size_t n = adj.size();
    if (n == 0) {
        res.millis = clock.ms();
        return res;
    }
    size_t m2 = 0;
    for (const auto& row : adj) m2 += row.size();
    if (m2 == n * (n - 1)) {  // complete graph
        res.value = res.lower = res.upper = static_cast<int>(n);
        res.certificate.resize(n);
        std::iota(res.certificate.begin(), res.certificate.end(), 0);
        res.millis = clock.ms();
        return res;
    }

    auto clique = greedy_clique(adj);
    int lb = static_cast<int>(clique.size());
    Coloring greedy;
    int ub = dsatur_upper(adj, greedy);
    res.certificate = greedy;
    res.lower = lb;
    res.upper = ub;

    uint64_t nodes = 0;
    for (int k = lb; k < ub; ++k) {
        KSearch search(adj, k, node_budget - nodes);
        bool sat = search.run(clique);
        nodes += search.nodes;
        if (search.out_of_budget) {
            res.exact = false;
            res.lower = k;  // every k' < k was refuted exhaustively
            res.value = ub;
            res.nodes_explored = nodes;
            res.millis = clock.ms();
            return res;
        }
        if (sat) {
            res.upper = k;
            res.certificate = search.color;
            break;
        }
        res.lower = k + 1;
    }
    res.value = res.upper;
    res.lower = res.upper;
    res.nodes_explored = nodes;
    res.millis = clock.ms();
    return res;
}

OracleResult exact_chromatic_number(const Graph& g, uint64_t node_budget) {
    std::vector<std::vector<uint32_t>> adj(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return exact_chromatic_number(adj, node_budget);
}

OracleResult exact_strong_chromatic_index(const Graph& g, int t, uint64_t node_budget) {
    ConflictGraph cg = conflict_graph(g, t);
    return exact_chromatic_number(cg.adj, node_budget);
}

ListColoringResult exact_list_coloring(const std::vector<std::vector<uint32_t>>& adj,
                                       const std::vector<std::vector<int>>& lists,
                                       uint64_t node_budget) {
    ListColoringResult res;
    size_t n = adj.size();
    std::vector<std::vector<int>> cur(lists);
    Coloring color(n, -1);

    // Backtracking with unit propagation; branch on the smallest open list.
    struct Frame { size_t v; int color; std::vector<std::pair<size_t, int>> removals; };

    auto remove_color = [&](size_t v, int c, std::vector<std::pair<size_t, int>>& log) {
        auto& lst = cur[v];
        auto it = std::find(lst.begin(), lst.end(), c);
        if (it != lst.end()) {
            lst.erase(it);
            log.emplace_back(v, c);
        }
    };

    std::function<bool()> solve = [&]() -> bool {
        if (++res.nodes_explored > node_budget) {
            res.exact = false;
            return false;
        }
        // Unit propagation.
        std::vector<std::pair<size_t, int>> log;
        std::vector<size_t> assigned_here;
        bool progress = true;
        bool dead = false;
        while (progress && !dead) {
            progress = false;
            for (size_t v = 0; v < n && !dead; ++v) {
                if (color[v] >= 0) continue;
                if (cur[v].empty()) dead = true;
                else if (cur[v].size() == 1) {
                    int c = cur[v][0];
                    color[v] = c;
                    assigned_here.push_back(v);
                    for (uint32_t u : adj[v])
                        if (color[u] < 0) remove_color(u, c, log);
                    progress = true;
                }
            }
        }
        auto undo = [&]() {
            for (size_t v : assigned_here) color[v] = -1;
            for (auto it = log.rbegin(); it != log.rend(); ++it) cur[it->first].push_back(it->second);
        };
        if (dead) {
            undo();
            return false;
        }
        size_t pick = n;
        for (size_t v = 0; v < n; ++v)
            if (color[v] < 0 && (pick == n || cur[v].size() < cur[pick].size())) pick = v;
        if (pick == n) return true;  // total

        auto options = cur[pick];
        for (int c : options) {
            color[pick] = c;
            std::vector<std::pair<size_t, int>> branch_log;
            for (uint32_t u : adj[pick])
                if (color[u] < 0) remove_color(u, c, branch_log);
            if (solve()) return true;
            for (auto it = branch_log.rbegin(); it != branch_log.rend(); ++it)
                cur[it->first].push_back(it->second);
            color[pick] = -1;
            if (!res.exact) break;
        }
        undo();
        return false;
    };

    res.sat = solve();
    if (res.sat) {
        res.certificate = color;
        res.exact = true;
    }
    return res;
}

BicliqueResult contains_biclique(const Graph& g, int s, int t, uint64_t node_budget) {
    if (s < 1 || t < 1) throw std::invalid_argument("biclique sides must be positive");
    BicliqueResult res;
    size_t n = g.num_vertices();
    // Enumerate s-subsets with pruning on the common neighborhood size.
    std::vector<Vertex> chosen;
    std::vector<Vertex> common;  // common neighborhood of chosen
    bool out_of_budget = false;

    std::function<bool(Vertex)> recurse = [&](Vertex from) -> bool {
        if (++res.nodes_explored > node_budget) {
            out_of_budget = true;
            return false;
        }
        if (chosen.size() == static_cast<size_t>(s)) {
            if (common.size() >= static_cast<size_t>(t)) {
                res.side_s = chosen;
                res.side_t.assign(common.begin(), common.begin() + t);
                return true;
            }
            return false;
        }
        for (Vertex v = from; v < n; ++v) {
            std::vector<Vertex> next;
            if (chosen.empty()) {
                next.assign(g.neighbors(v).begin(), g.neighbors(v).end());
            } else {
                std::set_intersection(common.begin(), common.end(), g.neighbors(v).begin(),
                                      g.neighbors(v).end(), std::back_inserter(next));
            }
            if (next.size() < static_cast<size_t>(t)) continue;
            chosen.push_back(v);
            std::swap(common, next);
            if (recurse(v + 1)) return true;
            std::swap(common, next);
            chosen.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    };

    bool found = recurse(0);
    if (found) res.verdict = Verdict::Yes;
    else if (out_of_budget) res.verdict = Verdict::Unknown;
    else res.verdict = Verdict::No;
    return res;
}

}  // namespace sc
