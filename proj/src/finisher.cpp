#include "finisher.hpp"

#include <algorithm>
#include <set>

#include "rng.hpp"

namespace sc {

FinishStats finish_lll(const ListState& ls, const FinishConfig& cfg, PartialColoring& phi) {
    if (cfg.ratio_required < 2.0)
        throw std::invalid_argument("ratio_required must be at least 2");
    size_t n = ls.n();
    std::vector<uint32_t> residual;
    for (uint32_t v = 0; v < n; ++v)
        if (ls.uncolored[v]) residual.push_back(v);

    FinishStats stats;
    stats.residual_vertices = residual.size();
    if (residual.empty()) return stats;

    // Fresh color degrees; the schedule's values are not trusted here.
    size_t dmax = 0;
    for (uint32_t v : residual) {
        size_t base = v * static_cast<size_t>(ls.palette);
        for (int c : ls.list_of(v))
            dmax = std::max(dmax, static_cast<size_t>(ls.tcount[base + c]));
    }
    for (uint32_t v : residual) {
        if (static_cast<double>(ls.list_size[v]) < cfg.ratio_required * static_cast<double>(dmax))
            throw FinisherPreconditionError(v, ls.list_size[v], dmax);
        if (ls.list_size[v] == 0) throw FinisherPreconditionError(v, 0, dmax);
    }

    std::vector<std::vector<int>> lists(n);
    for (uint32_t v : residual) lists[v] = ls.list_of(v);

    rng::Stream stream(rng::key(cfg.seed, 0xF11));
    auto draw = [&](uint32_t v) {
        phi.color[v] = lists[v][stream.below(lists[v].size())];
    };
    for (uint32_t v : residual) draw(v);

    // Violated constraints, kept ordered so the smallest live edge is
    // resampled first.
    std::set<std::pair<uint32_t, uint32_t>> violated;
    auto edge_violated = [&](uint32_t u, uint32_t v) {
        return ls.uncolored[u] && ls.uncolored[v] && phi.color[u] >= 0 &&
               phi.color[u] == phi.color[v];
    };
    for (uint32_t v : residual)
        for (uint32_t u : ls.live[v])
            if (u > v && edge_violated(v, u)) violated.emplace(v, u);

    long long cap = cfg.resample_cap > 0
                        ? cfg.resample_cap
                        : 1000LL * static_cast<long long>(residual.size());
    while (!violated.empty()) {
        if (static_cast<long long>(stats.resamples) >= cap)
            throw std::runtime_error("resample cap exhausted with " +
                                     std::to_string(violated.size()) + " violated constraints");
        auto [a, b] = *violated.begin();
        draw(a);
        draw(b);
        ++stats.resamples;
        for (uint32_t x : {a, b}) {
            for (uint32_t u : ls.live[x]) {
                if (!ls.uncolored[u]) continue;
                std::pair<uint32_t, uint32_t> e{std::min(x, u), std::max(x, u)};
                if (edge_violated(x, u)) violated.insert(e);
                else violated.erase(e);
            }
        }
    }
    for (uint32_t v : residual) phi.colored_at[v] = -2;  // finisher-colored
    return stats;
}

std::optional<GreedyFailure> finish_greedy(const ListState& ls, PartialColoring& phi) {
    size_t n = ls.n();
    std::vector<std::pair<size_t, uint32_t>> order;  // (live degree, id)
    for (uint32_t v = 0; v < n; ++v)
        if (ls.uncolored[v]) order.emplace_back(ls.live_degree(v), v);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    std::vector<uint8_t> assigned(n, 0);
    for (auto [deg, v] : order) {
        uint64_t used_small = 0;  // colors < 64 of assigned live neighbors
        std::set<int> used_big;
        for (uint32_t u : ls.live[v]) {
            if (!ls.uncolored[u] || !assigned[u]) continue;
            int c = phi.color[u];
            if (c < 64) used_small |= 1ULL << c;
            else used_big.insert(c);
        }
        int pick = -1;
        for (int c : ls.list_of(v)) {
            bool used = c < 64 ? (used_small >> c & 1) : used_big.count(c) > 0;
            if (!used) {
                pick = c;
                break;
            }
        }
        if (pick < 0) return GreedyFailure{v, ls.list_size[v], deg};
        phi.color[v] = pick;
        phi.colored_at[v] = -2;
        assigned[v] = 1;
    }
    return std::nullopt;
}

}  // namespace sc
