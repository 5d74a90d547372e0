#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sc {

Graph::Graph(size_t n, std::vector<std::pair<Vertex, Vertex>> pairs) {
    for (auto& [u, v] : pairs) {
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (u >= n || v >= n) throw std::invalid_argument("vertex id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    edges_ = std::move(pairs);

    adj_.assign(n, {});
    inc_.assign(n, {});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        inc_[u].push_back(e);
        inc_[v].push_back(e);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

size_t Graph::max_degree() const {
    size_t d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
    return d;
}

int64_t Graph::edge_id(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return it - edges_.begin();
}

std::vector<int> Graph::bfs_distances(Vertex v) const {
    std::vector<int> dist(num_vertices(), -1);
    std::queue<Vertex> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : adj_[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

std::vector<Vertex> Graph::vertex_ring(Vertex v, int i) const {
    if (v >= num_vertices()) throw std::invalid_argument("vertex out of range");
    auto dist = bfs_distances(v);
    std::vector<Vertex> ring;
    for (Vertex x = 0; x < num_vertices(); ++x)
        if (dist[x] == i) ring.push_back(x);
    return ring;
}

std::vector<EdgeId> Graph::edge_ring(Vertex v, int i) const {
    if (v >= num_vertices()) throw std::invalid_argument("vertex out of range");
    if (i < 1) throw std::invalid_argument("edge ring index must be positive");
    auto dist = bfs_distances(v);
    std::vector<EdgeId> ring;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        auto [x, y] = edges_[e];
        if (dist[x] < 0 && dist[y] < 0) continue;
        int dx = dist[x] < 0 ? std::numeric_limits<int>::max() : dist[x];
        int dy = dist[y] < 0 ? std::numeric_limits<int>::max() : dist[y];
        if (std::min(dx, dy) == i - 1) ring.push_back(e);
    }
    return ring;
}

size_t Graph::codegree(Vertex u, Vertex v) const {
    if (u == v) throw std::invalid_argument("codegree of a vertex with itself");
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

int Graph::girth() const {
    // BFS from every vertex; first cross edge closes a shortest cycle
    // through the root. The minimum over roots is the girth.
    int best = -1;
    size_t n = num_vertices();
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        dist[r] = 0;
        parent[r] = r;
        q.push(r);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : adj_[x]) {
                if (y == parent[x] && dist[y] == dist[x] - 1) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

bool Graph::is_regular() const {
    if (num_vertices() == 0) return true;
    size_t d = adj_[0].size();
    for (const auto& nbrs : adj_)
        if (nbrs.size() != d) return false;
    return true;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    for (const auto& [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(size_t line, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + what);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    std::vector<std::pair<uint64_t, uint64_t>> raw;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        uint64_t u, v;
        if (!(ls >> u)) continue;  // blank or comment
        if (!(ls >> v)) parse_fail(lineno, "expected two vertex ids");
        std::string rest;
        if (ls >> rest) parse_fail(lineno, "trailing token '" + rest + "'");
        if (u == v) parse_fail(lineno, "self-loop on vertex " + std::to_string(u));
        raw.emplace_back(u, v);
    }
    // Compact ids to [0,n) by ascending original id.
    std::map<uint64_t, Vertex> remap;
    for (auto [u, v] : raw) {
        remap.emplace(u, 0);
        remap.emplace(v, 0);
    }
    Vertex next = 0;
    for (auto& [orig, id] : remap) id = next++;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(raw.size());
    for (auto [u, v] : raw) pairs.emplace_back(remap[u], remap[v]);
    return Graph(remap.size(), std::move(pairs));
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    size_t n = 0;
    bool have_header = false;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c" || tag[0] == '#') continue;
        if (tag == "p") {
            std::string kind;
            size_t m;
            if (!(ls >> kind >> n >> m)) parse_fail(lineno, "malformed problem line");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) parse_fail(lineno, "edge before problem line");
            uint64_t u, v;
            if (!(ls >> u >> v)) parse_fail(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n) parse_fail(lineno, "vertex id out of range");
            if (u == v) parse_fail(lineno, "self-loop on vertex " + std::to_string(u));
            pairs.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            parse_fail(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) parse_fail(1, "missing DIMACS problem line");
    return Graph(n, std::move(pairs));
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        std::istringstream in(text);
        std::string line;
        format = GraphFormat::EdgeList;
        while (std::getline(in, line)) {
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#' || line[pos] == 'c') continue;
            if (line[pos] == 'p' || line[pos] == 'e') format = GraphFormat::Dimacs;
            break;
        }
    }
    return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
}

}  // namespace sc
