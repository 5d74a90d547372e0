#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sc {

using Vertex = uint32_t;
using EdgeId = uint32_t;

// Simple undirected graph with sorted adjacency and a canonical edge table.
// Edge ids are ranks in the lexicographic order of (min,max) endpoint pairs
// after dedup, so traces are reproducible across runs.
class Graph {
public:
    Graph() = default;

    // Builds from an endpoint pair list. Pairs are normalized, deduplicated
    // and sorted. Throws std::invalid_argument on self-loops.
    Graph(size_t n, std::vector<std::pair<Vertex, Vertex>> pairs);

    size_t num_vertices() const { return adj_.size(); }
    size_t num_edges() const { return edges_.size(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    size_t degree(Vertex v) const { return adj_[v].size(); }
    size_t max_degree() const;

    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    std::pair<Vertex, Vertex> edge(EdgeId e) const { return edges_[e]; }

    // Canonical id of edge {u,v}, or -1 if absent.
    int64_t edge_id(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }

    // Edge ids incident to v, ascending.
    const std::vector<EdgeId>& incident_edges(Vertex v) const { return inc_[v]; }

    // Distances from v by breadth-first search; unreachable = -1.
    std::vector<int> bfs_distances(Vertex v) const;

    // N_i(v): vertices at distance exactly i. N_0(v) = {v}.
    std::vector<Vertex> vertex_ring(Vertex v, int i) const;

    // E_i(v): edges whose closer endpoint is at distance i-1 from v, which
    // matches the inductive ring definition (E_1 incident to v, E_i incident
    // to E_{i-1} and outside earlier rings).
    std::vector<EdgeId> edge_ring(Vertex v, int i) const;

    // |N(u) ∩ N(v)| by sorted-list intersection. Rejects u == v.
    size_t codegree(Vertex u, Vertex v) const;

    // Girth (length of shortest cycle), or -1 if acyclic.
    int girth() const;

    bool is_regular() const;

    // Canonical edge-list text: one "u v" line per edge in id order.
    std::string to_edge_list() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<EdgeId>> inc_;
};

enum class GraphFormat { EdgeList, Dimacs, Auto };

// Parses edge-list ("u v" per line, '#' comments; ids compacted to [0,n) by
// ascending original id) or DIMACS ("p edge n m" header, "e u v" 1-based).
// Throws std::runtime_error with a line number on malformed input.
Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::Auto);
Graph load_graph(const std::string& path, GraphFormat format = GraphFormat::Auto);

}  // namespace sc
