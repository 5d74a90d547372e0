#include "conflict.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sc {

bool ConflictGraph::adjacent(uint32_t e, uint32_t f) const {
    const auto& row = adj[e];
    return std::binary_search(row.begin(), row.end(), f);
}

ConflictGraph conflict_graph(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("conflict graph requires t >= 2");
    if (g.num_vertices() == 0) throw std::invalid_argument("empty base graph");

    ConflictGraph cg;
    cg.base = &g;
    cg.t = t;
    cg.adj.assign(g.num_edges(), {});

    size_t n = g.num_vertices();
    std::vector<int> dist(n, -1);
    std::vector<Vertex> touched;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edge(e);
        // Multi-source BFS to depth t-1 from both endpoints.
        touched.clear();
        std::queue<Vertex> q;
        dist[a] = 0;
        dist[b] = 0;
        touched.push_back(a);
        touched.push_back(b);
        q.push(a);
        q.push(b);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            if (dist[x] == t - 1) continue;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    touched.push_back(y);
                    q.push(y);
                }
            }
        }
        // Conflicts: every edge with an endpoint within distance t-1 of {a,b}.
        auto& row = cg.adj[e];
        for (Vertex x : touched)
            for (EdgeId f : g.incident_edges(x))
                if (f != e) row.push_back(f);
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (Vertex x : touched) dist[x] = -1;
    }
    for (const auto& row : cg.adj) cg.max_degree = std::max(cg.max_degree, row.size());
    return cg;
}

ColoringReport verify_coloring(const std::vector<std::vector<uint32_t>>& adj,
                               const Coloring& phi, std::optional<int> palette) {
    ColoringReport rep;
    std::vector<bool> seen_color;
    for (uint32_t v = 0; v < adj.size(); ++v) {
        int c = v < phi.size() ? phi[v] : -1;
        if (c < 0) continue;
        if (palette && c >= *palette) rep.palette_violation = true;
        rep.class_sizes[c]++;
        for (uint32_t u : adj[v]) {
            if (u > v && u < phi.size() && phi[u] == c)
                rep.violations.emplace_back(v, u, c);
        }
    }
    rep.colors_used = rep.class_sizes.size();
    rep.valid = rep.violations.empty();
    return rep;
}

ColoringReport verify_coloring(const Graph& g, const Coloring& phi,
                               std::optional<int> palette) {
    std::vector<std::vector<uint32_t>> adj(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return verify_coloring(adj, phi, palette);
}

ColoringReport verify_coloring(const ConflictGraph& cg, const Coloring& phi,
                               std::optional<int> palette) {
    ColoringReport rep = verify_coloring(cg.adj, phi, palette);

    // Independent route, straight from the definition: within a color class,
    // no endpoint of one edge may lie within distance t-1 of an endpoint of
    // another. Uses depth-limited BFS on the base graph only. Two edges
    // conflict iff either has an endpoint in the other's (t-1)-ball, so a
    // sequential check-then-mark pass over each class finds any offender.
    const Graph& g = *cg.base;
    std::map<int, std::vector<EdgeId>> classes;
    for (uint32_t e = 0; e < phi.size() && e < cg.num_vertices(); ++e)
        if (phi[e] >= 0) classes[phi[e]].push_back(e);

    size_t n = g.num_vertices();
    std::vector<int> marked(n, -1);     // class-scan id
    std::vector<int> ball(n, -1);       // per-member scratch
    std::vector<int> depth(n, 0);
    std::vector<Vertex> touched;
    int scan = 0, member_id = 0;
    bool direct_valid = true;
    for (const auto& [c, members] : classes) {
        ++scan;
        for (EdgeId e : members) {
            auto [a, b] = g.edge(e);
            if (marked[a] == scan || marked[b] == scan) {
                direct_valid = false;
                break;
            }
            ++member_id;
            touched.clear();
            std::queue<Vertex> q;
            for (Vertex s : {a, b}) {
                if (ball[s] != member_id) {
                    ball[s] = member_id;
                    depth[s] = 0;
                    touched.push_back(s);
                    q.push(s);
                }
            }
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop();
                if (depth[x] == cg.t - 1) continue;
                for (Vertex y : g.neighbors(x)) {
                    if (ball[y] != member_id) {
                        ball[y] = member_id;
                        depth[y] = depth[x] + 1;
                        touched.push_back(y);
                        q.push(y);
                    }
                }
            }
            for (Vertex x : touched) marked[x] = scan;
        }
        if (!direct_valid) break;
    }
    if (direct_valid != rep.valid)
        throw std::logic_error("conflict-graph and induced-matching checks disagree");
    return rep;
}

}  // namespace sc
