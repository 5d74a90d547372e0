#include "spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rng.hpp"

namespace sc {

namespace {

constexpr size_t kIterationCap = 100000;

// One deflated power-iteration run on A + shift*I; returns the Rayleigh
// quotient of the converged vector (eigenvalue of the shifted operator).
std::pair<double, size_t> power_iterate(const Graph& g, double shift, double tol,
                                        bool& converged) {
    size_t n = g.num_vertices();
    std::vector<double> x(n), y(n);
    rng::Stream stream(rng::key(0xabcdefULL, n, g.num_edges()));
    for (auto& xi : x) xi = stream.unit() - 0.5;

    auto deflate = [&](std::vector<double>& v) {
        double mean = 0;
        for (double vi : v) mean += vi;
        mean /= static_cast<double>(n);
        for (double& vi : v) vi -= mean;
    };
    auto normalize = [&](std::vector<double>& v) {
        double norm = 0;
        for (double vi : v) norm += vi * vi;
        norm = std::sqrt(norm);
        if (norm > 0)
            for (double& vi : v) vi /= norm;
        return norm;
    };

    deflate(x);
    normalize(x);
    double rho = 0;
    converged = false;
    size_t it = 0;
    for (; it < kIterationCap; ++it) {
        for (Vertex v = 0; v < n; ++v) {
            double acc = shift * x[v];
            for (Vertex u : g.neighbors(v)) acc += x[u];
            y[v] = acc;
        }
        deflate(y);
        rho = 0;
        for (Vertex v = 0; v < n; ++v) rho += x[v] * y[v];
        // Residual ||Ax - rho x||: for symmetric operators this bounds the
        // distance from rho to the nearest eigenvalue.
        double res = 0;
        for (Vertex v = 0; v < n; ++v) {
            double r = y[v] - rho * x[v];
            res += r * r;
        }
        if (std::sqrt(res) <= tol * 0.5) {
            converged = true;
            break;
        }
        normalize(y);
        x.swap(y);
    }
    return {rho, it};
}

}  // namespace

SpectralResult second_eigenvalue(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!g.is_regular()) throw std::invalid_argument("second_eigenvalue needs a regular graph");
    size_t n = g.num_vertices();
    SpectralResult out;
    if (n <= 1) {
        out.converged = true;
        return out;
    }
    double d = static_cast<double>(g.degree(0));

    bool conv_shifted = false, conv_plain = false;
    auto [rho_shifted, it1] = power_iterate(g, d, tol, conv_shifted);
    out.lambda2 = rho_shifted - d;
    auto [rho_plain, it2] = power_iterate(g, 0.0, tol, conv_plain);
    out.deflated_magnitude = std::abs(rho_plain);
    out.converged = conv_shifted;
    out.iterations = it1 + it2;
    return out;
}

MixingCheck expander_mixing_check(const Graph& g, double lambda, size_t trials, uint64_t seed) {
    if (!g.is_regular()) throw std::invalid_argument("mixing check needs a regular graph");
    size_t n = g.num_vertices();
    double d = n > 0 ? static_cast<double>(g.degree(0)) : 0.0;
    MixingCheck out;

    auto check_pair = [&](uint64_t smask, uint64_t tmask) {
        // e(S,T): ordered pairs (u,v), u in S, v in T, uv an edge.
        size_t cnt = 0, scount = 0, tcount = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (smask >> u & 1) ++scount;
            if (tmask >> u & 1) ++tcount;
        }
        for (Vertex u = 0; u < n; ++u) {
            if (!(smask >> u & 1)) continue;
            for (Vertex v : g.neighbors(u))
                if (tmask >> v & 1) ++cnt;
        }
        double st = static_cast<double>(scount) * static_cast<double>(tcount);
        double dev = std::abs(static_cast<double>(cnt) - d / static_cast<double>(n) * st);
        out.max_deviation = std::max(out.max_deviation, dev);
        const double eps = 1e-9;
        if (dev > lambda * std::sqrt(st) + eps) ++out.standard_violations;
        if (dev > std::sqrt(lambda * st) + eps) ++out.sqrt_form_violations;
        ++out.pairs_checked;
    };

    if (trials == 0 && n <= 20) {
        uint64_t lim = 1ULL << n;
        for (uint64_t s = 0; s < lim; ++s)
            for (uint64_t t = 0; t < lim; ++t) check_pair(s, t);
        return out;
    }
    if (n > 64) throw std::invalid_argument("sampled mixing check supports n <= 64");
    rng::Stream stream(rng::key(seed, 0x6d6978));
    uint64_t vmask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (size_t i = 0; i < trials; ++i)
        check_pair(stream.next() & vmask, stream.next() & vmask);
    return out;
}

}  // namespace sc
