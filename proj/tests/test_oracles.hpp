// Test-only brute-force oracles. These stay independent of the library code
// paths they are used to check: distances come from fresh BFS here, conflict
// adjacency from the pairwise-distance definition, eigenvalues from a dense
// solver, and colorings from plain exhaustive search.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "graph.hpp"

#ifdef SC_HAVE_EIGEN
#include <Eigen/Dense>
#endif

namespace oracle_support {

inline std::vector<std::vector<int>> all_pairs_distances(const sc::Graph& g) {
    size_t n = g.num_vertices();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (sc::Vertex s = 0; s < n; ++s) {
        std::queue<sc::Vertex> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            sc::Vertex x = q.front();
            q.pop();
            for (sc::Vertex y : g.neighbors(x))
                if (dist[s][y] < 0) {
                    dist[s][y] = dist[s][x] + 1;
                    q.push(y);
                }
        }
    }
    return dist;
}

// Conflict adjacency straight from the definition: some endpoint of e within
// distance t-1 of some endpoint of f.
inline bool brute_conflict_adjacent(const std::vector<std::vector<int>>& dist,
                                    std::pair<sc::Vertex, sc::Vertex> e,
                                    std::pair<sc::Vertex, sc::Vertex> f, int t) {
    for (sc::Vertex a : {e.first, e.second})
        for (sc::Vertex b : {f.first, f.second}) {
            int d = dist[a][b];
            if (d >= 0 && d <= t - 1) return true;
        }
    return false;
}

inline size_t brute_codegree(const sc::Graph& g, sc::Vertex u, sc::Vertex v) {
    size_t count = 0;
    for (sc::Vertex w = 0; w < g.num_vertices(); ++w) {
        if (w == u || w == v) continue;
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++count;
    }
    return count;
}

// Girth by deleting each edge and measuring the endpoint distance around it.
inline int brute_girth(const sc::Graph& g) {
    int best = -1;
    for (sc::EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        // BFS from u avoiding the edge uv.
        std::vector<int> dist(g.num_vertices(), -1);
        std::queue<sc::Vertex> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            sc::Vertex x = q.front();
            q.pop();
            for (sc::Vertex y : g.neighbors(x)) {
                if ((x == u && y == v) || (x == v && y == u)) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    return best;
}

// Naive K_{s,t} detection: every s-subset against its common neighborhood.
inline bool brute_has_biclique(const sc::Graph& g, int s, int t) {
    size_t n = g.num_vertices();
    std::vector<sc::Vertex> subset(s);
    std::function<bool(int, sc::Vertex)> rec = [&](int depth, sc::Vertex from) {
        if (depth == s) {
            size_t common = 0;
            for (sc::Vertex w = 0; w < n; ++w) {
                bool all = true;
                for (int i = 0; i < s; ++i)
                    if (!g.has_edge(subset[i], w)) {
                        all = false;
                        break;
                    }
                if (all) ++common;
            }
            return common >= static_cast<size_t>(t);
        }
        for (sc::Vertex v = from; v < n; ++v) {
            subset[depth] = v;
            if (rec(depth + 1, v + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

// Plain exhaustive k-colorability (no pruning beyond properness).
inline bool brute_k_colorable(const std::vector<std::vector<uint32_t>>& adj, int k) {
    size_t n = adj.size();
    std::vector<int> color(n, -1);
    std::function<bool(size_t)> rec = [&](size_t v) {
        if (v == n) return true;
        // Symmetry: vertex v may only open one new color.
        int maxc = 0;
        for (size_t u = 0; u < v; ++u) maxc = std::max(maxc, color[u] + 1);
        for (int c = 0; c < std::min(k, maxc + 1); ++c) {
            bool ok = true;
            for (uint32_t u : adj[v])
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                color[v] = c;
                if (rec(v + 1)) return true;
                color[v] = -1;
            }
        }
        return false;
    };
    return rec(0);
}

inline int brute_chromatic_number(const std::vector<std::vector<uint32_t>>& adj) {
    for (int k = 1;; ++k)
        if (brute_k_colorable(adj, k)) return k;
}

#ifdef SC_HAVE_EIGEN
// Dense symmetric eigensolver: all adjacency eigenvalues, ascending.
inline std::vector<double> dense_spectrum(const sc::Graph& g) {
    size_t n = g.num_vertices();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (sc::Vertex v = 0; v < n; ++v)
        for (sc::Vertex u : g.neighbors(v)) a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    std::vector<double> eigs(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + n);
    return eigs;
}

// Second largest (signed) eigenvalue.
inline double dense_lambda2(const sc::Graph& g) {
    auto eigs = dense_spectrum(g);
    return eigs[eigs.size() - 2];
}
#endif

}  // namespace oracle_support
