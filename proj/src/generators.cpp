#include "generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

#include "rng.hpp"

namespace sc {

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < n; ++i)
        pairs.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(pairs));
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("biclique sides must be positive");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            pairs.emplace_back(i, a + j);
    return Graph(a + b, std::move(pairs));
}

Graph gen_c5_blowup(int t) {
    if (t < 1) throw std::invalid_argument("blowup factor must be >= 1");
    // Class i occupies [i*t, (i+1)*t); classes i and i+1 (mod 5) are joined
    // completely.
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        for (int x = 0; x < t; ++x)
            for (int y = 0; y < t; ++y)
                pairs.emplace_back(i * t + x, j * t + y);
    }
    return Graph(5 * t, std::move(pairs));
}

namespace {

// One configuration-model pairing attempt; empty on self-loop/multi-edge.
std::vector<std::pair<Vertex, Vertex>> try_pairing(int n, int d, rng::Stream& stream,
                                                   bool drop_last_stub) {
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);
    if (drop_last_stub && !stubs.empty()) stubs.pop_back();
    // Fisher-Yates with the seeded stream.
    for (size_t i = stubs.size(); i > 1; --i) {
        size_t j = stream.below(i);
        std::swap(stubs[i - 1], stubs[j]);
    }
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        Vertex u = stubs[i], v = stubs[i + 1];
        if (u == v) return {};
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second) return {};
        pairs.emplace_back(u, v);
    }
    return pairs;
}

}  // namespace

Graph gen_random_regular(int n, int d, uint64_t seed, int restart_budget) {
    if (n <= 0 || d < 0) throw std::invalid_argument("need n > 0, d >= 0");
    if (d >= n) throw std::invalid_argument("regular graph needs d < n");
    if ((static_cast<int64_t>(n) * d) % 2 != 0)
        throw std::invalid_argument("n*d must be even for a d-regular graph");
    for (int attempt = 0; attempt < restart_budget; ++attempt) {
        rng::Stream stream(rng::key(seed, /*domain=*/0x6772, attempt));
        auto pairs = try_pairing(n, d, stream, false);
        if (!pairs.empty() || d == 0) return Graph(n, std::move(pairs));
    }
    throw std::runtime_error("configuration model restart budget exhausted");
}

namespace {

// Finite field GF(q) for the tabulated prime powers, as polynomials over
// GF(p) reduced by a fixed irreducible polynomial.
struct FieldTable {
    int q;
    std::vector<std::vector<int>> mul;
    std::vector<std::vector<int>> add;
};

FieldTable make_field(int q) {
    struct Desc { int p, k, poly; };  // poly: reduction polynomial bits, base-p digits
    static const std::array<std::pair<int, Desc>, 10> descs = {{
        {2, {2, 1, 0}},  {3, {3, 1, 0}},  {4, {2, 2, 0b111}},   {5, {5, 1, 0}},
        {7, {7, 1, 0}},  {8, {2, 3, 0b1011}}, {9, {3, 2, 10}},  // x^2 + 1 over GF(3)
        {11, {11, 1, 0}}, {13, {13, 1, 0}}, {16, {2, 4, 0b10011}},
    }};
    const Desc* desc = nullptr;
    for (const auto& [qq, dd] : descs)
        if (qq == q) desc = &dd;
    if (!desc) throw std::invalid_argument("unsupported prime power q=" + std::to_string(q));

    int p = desc->p, k = desc->k;
    auto digits = [&](int x) {
        std::vector<int> out(k + k, 0);
        for (int i = 0; i < k + k && x; ++i, x /= p) out[i] = x % p;
        return out;
    };
    auto value = [&](const std::vector<int>& dig) {
        int x = 0;
        for (int i = k - 1; i >= 0; --i) x = x * p + dig[i];
        return x;
    };
    std::vector<int> red = digits(desc->poly);

    FieldTable f;
    f.q = q;
    f.add.assign(q, std::vector<int>(q));
    f.mul.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            auto da = digits(a), db = digits(b);
            std::vector<int> sum(k, 0);
            for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
            sum.resize(k + k, 0);
            f.add[a][b] = value(sum);

            std::vector<int> prod(2 * k, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            // Reduce by the monic polynomial of degree k.
            for (int deg = 2 * k - 2; deg >= k; --deg) {
                int coef = prod[deg];
                if (coef == 0) continue;
                prod[deg] = 0;
                for (int i = 0; i < k; ++i)
                    prod[deg - k + i] = ((prod[deg - k + i] - coef * red[i]) % p + p * p) % p;
            }
            prod.resize(k + k, 0);
            f.mul[a][b] = value(prod);
        }
    }
    return f;
}

}  // namespace

Graph gen_projective_incidence(int q) {
    FieldTable f = make_field(q);
    // Points of PG(2,q): nonzero triples over GF(q) normalized so the first
    // nonzero coordinate is 1. Lines are the same set by duality; point
    // (x,y,z) lies on line [a,b,c] iff ax + by + cz = 0.
    std::vector<std::array<int, 3>> points;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                int lead = x != 0 ? x : (y != 0 ? y : z);
                if (lead != 1) continue;
                points.push_back({x, y, z});
            }
    size_t np = points.size();  // q^2 + q + 1
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (size_t i = 0; i < np; ++i) {
        for (size_t j = 0; j < np; ++j) {
            int dot = 0;
            for (int k = 0; k < 3; ++k)
                dot = f.add[dot][f.mul[points[i][k]][points[j][k]]];
            if (dot == 0) pairs.emplace_back(i, np + j);
        }
    }
    return Graph(2 * np, std::move(pairs));
}

namespace {

// Shortest cycle and one witness cycle's edge ids; empty if acyclic.
std::pair<int, std::vector<EdgeId>> shortest_cycle(const Graph& g) {
    int best = -1;
    std::vector<EdgeId> best_cycle;
    size_t n = g.num_vertices();
    std::vector<int> dist(n), parent(n);
    for (Vertex r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        dist[r] = 0;
        parent[r] = -1;
        q.push(r);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            if (best >= 0 && 2 * dist[x] >= best) break;
            for (Vertex y : g.neighbors(x)) {
                if (static_cast<int>(y) == parent[x]) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (dist[y] >= dist[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) {
                        best = len;
                        // Walk both endpoints to the root, trim the shared
                        // tail, and keep the simple cycle through the LCA.
                        std::vector<Vertex> px, py;
                        for (int v = x; v >= 0; v = parent[v]) px.push_back(v);
                        for (int v = y; v >= 0; v = parent[v]) py.push_back(v);
                        while (px.size() >= 2 && py.size() >= 2 &&
                               px[px.size() - 2] == py[py.size() - 2]) {
                            px.pop_back();
                            py.pop_back();
                        }
                        best_cycle.clear();
                        best_cycle.push_back(g.edge_id(x, y));
                        for (size_t i = 0; i + 1 < px.size(); ++i)
                            best_cycle.push_back(g.edge_id(px[i], px[i + 1]));
                        for (size_t i = 0; i + 1 < py.size(); ++i)
                            best_cycle.push_back(g.edge_id(py[i], py[i + 1]));
                    }
                }
            }
        }
    }
    return {best, best_cycle};
}

}  // namespace

HighGirthResult gen_high_girth_regular(int n, int d, int g, uint64_t seed) {
    if (g < 4) throw std::invalid_argument("girth target must be >= 4");
    if (n <= 0 || d < 1 || d >= n) throw std::invalid_argument("need 0 < d < n");
    HighGirthResult out;
    // Rough feasibility: a d-regular girth-g graph needs on the order of
    // (d-1)^(g/2) vertices (Moore bound).
    double moore = std::pow(std::max(1, d - 1), g / 2.0);
    out.warned_infeasible = static_cast<double>(n) < moore;

    bool odd = (static_cast<int64_t>(n) * d) % 2 != 0;
    Graph base = [&] {
        if (!odd) return gen_random_regular(n, d, seed);
        // Odd stub count: drop one stub of the last vertex, leaving it at
        // degree d-1.
        for (int attempt = 0; attempt < 10000; ++attempt) {
            rng::Stream stream(rng::key(seed, 0x6772, attempt));
            auto pairs = try_pairing(n, d, stream, true);
            if (!pairs.empty()) return Graph(n, std::move(pairs));
        }
        throw std::runtime_error("configuration model restart budget exhausted");
    }();

    std::vector<std::pair<Vertex, Vertex>> edges = base.edges();
    for (;;) {
        Graph cur(n, edges);
        auto [len, cycle] = shortest_cycle(cur);
        if (len < 0 || len >= g) {
            out.graph = std::move(cur);
            break;
        }
        EdgeId victim = *std::min_element(cycle.begin(), cycle.end());
        auto victim_pair = cur.edge(victim);
        edges.erase(std::remove(edges.begin(), edges.end(), victim_pair), edges.end());
        out.deleted_edges++;
    }
    return out;
}

Graph generate(const GenSpec& s) {
    if (s.family == "cycle") return gen_cycle(s.n);
    if (s.family == "complete-bipartite") return gen_complete_bipartite(s.a, s.b);
    if (s.family == "c5-blowup") return gen_c5_blowup(s.t);
    if (s.family == "random-regular") return gen_random_regular(s.n, s.d, s.seed);
    if (s.family == "projective-incidence") return gen_projective_incidence(s.q);
    if (s.family == "high-girth-regular")
        return gen_high_girth_regular(s.n, s.d, s.girth, s.seed).graph;
    throw std::invalid_argument("unknown family '" + s.family + "'");
}

}  // namespace sc
