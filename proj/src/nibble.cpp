#include "nibble.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "rng.hpp"

namespace sc {

namespace {
constexpr uint64_t kActivate = 0xA1;
constexpr uint64_t kAssign = 0xA2;
constexpr uint64_t kCoin = 0xA3;
}  // namespace

std::vector<int> ListState::list_of(uint32_t v) const {
    std::vector<int> out;
    out.reserve(list_size[v]);
    for (size_t w = 0; w < words; ++w) {
        uint64_t word = bits[v * words + w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<int>(w * 64 + b));
            word &= word - 1;
        }
    }
    return out;
}

size_t ListState::live_degree(uint32_t v) const {
    size_t deg = 0;
    for (uint32_t u : live[v])
        if (uncolored[u]) ++deg;
    return deg;
}

void ListState::delete_color(uint32_t v, int c) {
    uint64_t& word = bits[v * words + c / 64];
    uint64_t mask = 1ULL << (c % 64);
    if (!(word & mask)) return;
    word &= ~mask;
    --list_size[v];
    size_t col = static_cast<size_t>(c);
    for (uint32_t w : live[v])
        if (uncolored[w]) --tcount[w * static_cast<size_t>(palette) + col];
}

void ListState::mark_colored(uint32_t v) {
    uncolored[v] = 0;
    auto lst = list_of(v);
    for (uint32_t w : live[v]) {
        if (!uncolored[w]) continue;
        size_t base = w * static_cast<size_t>(palette);
        for (int c : lst) --tcount[base + c];
    }
}

void ListState::prune_edge(uint32_t u, uint32_t v) {
    for (int c : list_of(u)) --tcount[v * static_cast<size_t>(palette) + c];
    for (int c : list_of(v)) --tcount[u * static_cast<size_t>(palette) + c];
    auto drop = [](std::vector<uint32_t>& row, uint32_t x) {
        row.erase(std::remove(row.begin(), row.end(), x), row.end());
    };
    drop(live[u], v);
    drop(live[v], u);
}

ListState init_lists(const ConflictGraph& cg, int k) {
    if (k < 1) throw std::invalid_argument("palette size must be >= 1");
    ListState ls;
    ls.cg = &cg;
    ls.iteration = 1;
    ls.palette = k;
    ls.words = (k + 63) / 64;
    size_t n = cg.num_vertices();
    ls.bits.assign(n * ls.words, 0);
    for (uint32_t v = 0; v < n; ++v) {
        for (int c = 0; c < k; ++c) ls.bits[v * ls.words + c / 64] |= 1ULL << (c % 64);
    }
    ls.list_size.assign(n, k);
    ls.uncolored.assign(n, 1);
    ls.live = cg.adj;
    ls.tcount.assign(n * static_cast<size_t>(k), 0);
    for (uint32_t v = 0; v < n; ++v) {
        uint32_t deg = static_cast<uint32_t>(cg.adj[v].size());
        std::fill_n(ls.tcount.begin() + v * static_cast<size_t>(k), k, deg);
    }
    return ls;
}

double equalizing_probability(double eta, double L, double T, double t) {
    if (L <= eta) throw std::invalid_argument("need L > eta");
    if (t >= T) return 1.0;
    double p = std::exp((T - t) * std::log1p(-eta / L));
    return std::min(1.0, p);
}

BadEventLog nibble_iteration(ListState& ls, const Schedule& sched, uint64_t seed, int retry,
                             std::vector<uint32_t>* newly_colored_out, PartialColoring* phi) {
    const int i = ls.iteration;
    const double eta = static_cast<double>(sched.eta);
    const double Li = static_cast<double>(sched.at(sched.L, i));
    const double Ti = static_cast<double>(sched.at(sched.T, i));
    BadEventLog log;

    size_t n = ls.n();
    // N1 + N3 proposals: activation and uniform color assignment.
    std::vector<std::pair<uint32_t, int>> proposals;
    for (uint32_t v = 0; v < n; ++v) {
        if (!ls.uncolored[v] || ls.list_size[v] == 0) continue;
        if (!rng::bernoulli(rng::key(seed, kActivate, i, retry, v), eta)) continue;
        ++log.activated;
        uint64_t pick = rng::key(seed, kAssign, i, retry, v) % ls.list_size[v];
        int c = -1;
        // Select the pick-th color of the list.
        size_t base = v * ls.words;
        for (size_t w = 0; w < ls.words && c < 0; ++w) {
            uint64_t word = ls.bits[base + w];
            int pc = std::popcount(word);
            if (pick >= static_cast<uint64_t>(pc)) {
                pick -= pc;
                continue;
            }
            while (word) {
                int b = std::countr_zero(word);
                if (pick == 0) {
                    c = static_cast<int>(w * 64 + b);
                    break;
                }
                --pick;
                word &= word - 1;
            }
        }
        proposals.emplace_back(v, c);
        ++log.assignments;
    }

    // Pending deletions, deduplicated with a scratch bitmap.
    std::vector<uint64_t> pending(ls.bits.size(), 0);
    std::vector<std::pair<uint32_t, int>> deletions;
    auto pend = [&](uint32_t v, int c) {
        uint64_t& word = pending[v * ls.words + c / 64];
        uint64_t mask = 1ULL << (c % 64);
        if (word & mask) return;
        word |= mask;
        deletions.emplace_back(v, c);
    };

    // N3: wasteful deletion from every T_i(v,c) member, colored or not kept.
    for (auto [v, c] : proposals) {
        for (uint32_t u : ls.live[v])
            if (ls.uncolored[u] && ls.has_color(u, c)) pend(u, c);
    }
    log.wasteful_deletions = deletions.size();

    // N4: a proposal is kept iff its color survived all N3 deletions.
    std::vector<uint32_t> colored;
    std::vector<int> colored_color;
    for (auto [v, c] : proposals) {
        if (pending[v * ls.words + c / 64] >> (c % 64) & 1) continue;
        colored.push_back(v);
        colored_color.push_back(c);
    }
    log.colored = colored.size();

    // N5: equalizing coin flips with start-of-iteration color degrees.
    // Survival chances are tabulated per integer color degree.
    size_t max_t = 0;
    for (uint32_t v = 0; v < n; ++v) {
        if (!ls.uncolored[v]) continue;
        size_t base = v * static_cast<size_t>(ls.palette);
        for (int c : ls.list_of(v)) max_t = std::max(max_t, static_cast<size_t>(ls.tcount[base + c]));
    }
    double log_base = std::log1p(-eta / Li);
    std::vector<double> survive(max_t + 1, 1.0);
    for (size_t t = 0; t <= max_t; ++t)
        survive[t] = static_cast<double>(t) >= Ti
                         ? 1.0
                         : std::min(1.0, std::exp((Ti - static_cast<double>(t)) * log_base));

    std::vector<bool> is_colored_now(n, false);
    for (uint32_t v : colored) is_colored_now[v] = true;
    size_t coin_kills = 0;
    for (uint32_t v = 0; v < n; ++v) {
        if (!ls.uncolored[v] || is_colored_now[v]) continue;
        size_t base = v * static_cast<size_t>(ls.palette);
        for (int c : ls.list_of(v)) {
            double p = survive[ls.tcount[base + c]];
            if (p >= 1.0) continue;
            if (!rng::bernoulli(rng::key(seed, kCoin, i, retry, v, c), p)) {
                pend(v, c);
                ++coin_kills;
            }
        }
    }
    log.coin_deletions = coin_kills;

    // Commit: list deletions first, then colorings.
    for (auto [v, c] : deletions) ls.delete_color(v, c);
    for (size_t idx = 0; idx < colored.size(); ++idx) {
        uint32_t v = colored[idx];
        ls.mark_colored(v);
        if (phi) {
            phi->color[v] = colored_color[idx];
            phi->colored_at[v] = i;
        }
    }
    if (newly_colored_out) *newly_colored_out = colored;

    long long next_target = sched.integer_view(i + 1).first;
    size_t sum = 0, cnt = 0;
    for (uint32_t v = 0; v < n; ++v) {
        if (!ls.uncolored[v]) continue;
        ++cnt;
        sum += ls.list_size[v];
        if (static_cast<long long>(ls.list_size[v]) < next_target) ++log.list_shortfalls;
    }
    log.mean_pretrim_list = cnt ? static_cast<double>(sum) / static_cast<double>(cnt) : 0.0;
    return log;
}

void trim(ListState& ls, long long list_target) {
    size_t n = ls.n();
    // T1: cut every oversized list down to the target, dropping colors with
    // the highest color degree first (ties to the larger color id).
    std::vector<std::pair<uint32_t, int>> order;
    for (uint32_t v = 0; v < n; ++v) {
        if (!ls.uncolored[v]) continue;
        long long excess = static_cast<long long>(ls.list_size[v]) - list_target;
        if (excess <= 0) continue;
        order.clear();
        size_t base = v * static_cast<size_t>(ls.palette);
        for (int c : ls.list_of(v)) order.emplace_back(ls.tcount[base + c], c);
        std::sort(order.begin(), order.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second > b.second;
                  });
        for (long long k = 0; k < excess; ++k) ls.delete_color(v, order[k].second);
    }

    // T2: prune live edges with disjoint lists. Two lists with sizes summing
    // above the palette always intersect, so most edges skip the word scan.
    std::vector<std::pair<uint32_t, uint32_t>> prunes;
    for (uint32_t v = 0; v < n; ++v) {
        if (!ls.uncolored[v]) continue;
        for (uint32_t u : ls.live[v]) {
            if (u <= v || !ls.uncolored[u]) continue;
            if (ls.list_size[v] + ls.list_size[u] > static_cast<size_t>(ls.palette)) continue;
            bool disjoint = true;
            for (size_t w = 0; w < ls.words && disjoint; ++w)
                disjoint = (ls.bits[v * ls.words + w] & ls.bits[u * ls.words + w]) == 0;
            if (disjoint) prunes.emplace_back(v, u);
        }
    }
    for (auto [v, u] : prunes) ls.prune_edge(v, u);
}

PropertyReport check_properties(const ListState& ls, const FamilyX& fx, const FriendModel& fm,
                                const Schedule& sched, int i, size_t pair_budget) {
    PropertyReport rep;
    const double Li = static_cast<double>(sched.at(sched.L, i));
    const double Ti = static_cast<double>(sched.at(sched.T, i));
    const double Qi = static_cast<double>(sched.at(sched.Q, i));
    const double Xi = static_cast<double>(sched.at(sched.X, i));
    const double Bi = static_cast<double>(sched.at(sched.B, i));
    long long l_target = sched.integer_view(i).first;
    size_t n = ls.n();

    auto entry = [&](const std::string& id, double bound) {
        PropertyEntry e;
        e.id = id;
        e.bound = bound;
        return e;
    };
    auto note = [&](PropertyEntry& e, double measured, const std::string& witness, bool ok) {
        if (!ok) {
            ++e.bad_events;
            e.pass = false;
        }
        if (e.witness.empty() || measured > e.worst_measured) {
            e.worst_measured = measured;
            e.witness = witness;
        }
    };

    // P1: exact list sizes.
    PropertyEntry p1 = entry("P1", static_cast<double>(l_target));
    for (uint32_t v = 0; v < n; ++v) {
        if (!ls.uncolored[v]) continue;
        bool ok = static_cast<long long>(ls.list_size[v]) == l_target;
        if (!ok) note(p1, ls.list_size[v], "v=" + std::to_string(v), false);
    }
    rep.entries.push_back(p1);

    // P2: color degrees.
    PropertyEntry p2 = entry("P2", Ti);
    for (uint32_t v = 0; v < n; ++v) {
        if (!ls.uncolored[v]) continue;
        size_t base = v * static_cast<size_t>(ls.palette);
        for (int c : ls.list_of(v)) {
            double t = ls.tcount[base + c];
            note(p2, t, "v=" + std::to_string(v) + " c=" + std::to_string(c), t <= Ti);
        }
    }
    rep.entries.push_back(p2);

    // Shared helper: members of T_i(v,c).
    auto tset = [&](uint32_t v, int c) {
        std::vector<uint32_t> out;
        for (uint32_t u : ls.live[v])
            if (ls.uncolored[u] && ls.has_color(u, c)) out.push_back(u);
        return out;  // ascending, live lists stay sorted
    };

    // P3: stranger codegrees via common live neighbors.
    PropertyEntry p3 = entry("P3", Qi);
    size_t pairs_seen = 0;
    {
        std::set<std::pair<uint32_t, uint32_t>> seen;
        for (uint32_t w = 0; w < n && !rep.truncated; ++w) {
            if (!ls.uncolored[w]) continue;
            const auto& row = ls.live[w];
            for (size_t a = 0; a < row.size() && !rep.truncated; ++a) {
                uint32_t u = row[a];
                if (!ls.uncolored[u]) continue;
                for (size_t b = a + 1; b < row.size(); ++b) {
                    uint32_t v = row[b];
                    if (!ls.uncolored[v] || fm.edge_friends(u, v)) continue;
                    if (!seen.emplace(u, v).second) continue;
                    if (++pairs_seen > pair_budget) {
                        rep.truncated = true;
                        break;
                    }
                    for (int c : ls.list_of(u)) {
                        if (!ls.has_color(v, c)) continue;
                        auto tu = tset(u, c), tv = tset(v, c);
                        size_t q = 0, x = 0, y = 0;
                        while (x < tu.size() && y < tv.size()) {
                            if (tu[x] < tv[y]) ++x;
                            else if (tu[x] > tv[y]) ++y;
                            else { ++q; ++x; ++y; }
                        }
                        note(p3, static_cast<double>(q),
                             "u=" + std::to_string(u) + " v=" + std::to_string(v) +
                                 " c=" + std::to_string(c),
                             static_cast<double>(q) <= Qi);
                    }
                }
            }
        }
    }
    rep.entries.push_back(p3);

    // P4: friend pairs within a set, codegree restricted to B^X.
    PropertyEntry p4 = entry("P4", Qi);
    for (const auto& s : fx.sets) {
        if (s.members.size() < 2) continue;
        for (size_t a = 0; a < s.members.size(); ++a) {
            uint32_t u = s.members[a];
            if (!ls.uncolored[u]) continue;
            for (size_t b = a + 1; b < s.members.size(); ++b) {
                uint32_t v = s.members[b];
                if (!ls.uncolored[v] || !fm.edge_friends(u, v)) continue;
                for (int c : ls.list_of(u)) {
                    if (!ls.has_color(v, c)) continue;
                    auto tu = tset(u, c), tv = tset(v, c);
                    size_t q = 0, x = 0, y = 0;
                    while (x < tu.size() && y < tv.size()) {
                        if (tu[x] < tv[y]) ++x;
                        else if (tu[x] > tv[y]) ++y;
                        else {
                            if (std::binary_search(s.bx.begin(), s.bx.end(), tu[x])) ++q;
                            ++x; ++y;
                        }
                    }
                    note(p4, static_cast<double>(q),
                         "u=" + std::to_string(u) + " v=" + std::to_string(v) +
                             " c=" + std::to_string(c),
                         static_cast<double>(q) <= Qi);
                }
            }
        }
    }
    rep.entries.push_back(p4);

    // P5: survivors per set and color.
    PropertyEntry p5 = entry("P5", Xi);
    for (const auto& s : fx.sets) {
        if (s.members.size() == 1) {
            // A singleton contributes at most one survivor.
            if (Xi < 1.0) {
                uint32_t v = s.members[0];
                if (ls.uncolored[v] && ls.list_size[v] > 0)
                    note(p5, 1.0, "singleton v=" + std::to_string(v), false);
            }
            continue;
        }
        std::map<int, size_t> per_color;
        for (uint32_t v : s.members) {
            if (!ls.uncolored[v]) continue;
            for (int c : ls.list_of(v)) ++per_color[c];
        }
        for (auto [c, cnt] : per_color)
            note(p5, static_cast<double>(cnt),
                 "owner=" + std::to_string(s.owner) + " c=" + std::to_string(c),
                 static_cast<double>(cnt) <= Xi);
    }
    rep.entries.push_back(p5);

    // P6: B^X deficit.
    PropertyEntry p6 = entry("P6", Ti - Bi);
    for (const auto& s : fx.sets) {
        if (s.members.size() < 2) continue;
        for (uint32_t v : s.members) {
            if (!ls.uncolored[v]) continue;
            size_t base = v * static_cast<size_t>(ls.palette);
            for (int c : ls.list_of(v)) {
                size_t b = 0;
                for (uint32_t u : ls.live[v])
                    if (ls.uncolored[u] && ls.has_color(u, c) &&
                        std::binary_search(s.bx.begin(), s.bx.end(), u))
                        ++b;
                double deficit = static_cast<double>(ls.tcount[base + c]) - static_cast<double>(b);
                note(p6, deficit,
                     "owner=" + std::to_string(s.owner) + " v=" + std::to_string(v) +
                         " c=" + std::to_string(c),
                     deficit <= Ti - Bi);
            }
        }
    }
    rep.entries.push_back(p6);

    rep.all_pass = true;
    for (const auto& e : rep.entries) rep.all_pass = rep.all_pass && e.pass;
    return rep;
}

NibbleResult run_nibble(const ConflictGraph& cg, const FamilyX& fx, const FriendModel& fm,
                        const Schedule& sched, NibbleMode mode, int retry_budget,
                        uint64_t seed) {
    NibbleResult out;
    size_t n = cg.num_vertices();
    out.coloring.color.assign(n, -1);
    out.coloring.colored_at.assign(n, -1);

    auto [k, exhausted] = sched.integer_view(1);
    if (exhausted) throw std::runtime_error("schedule starts with an empty list target");
    out.state = init_lists(cg, static_cast<int>(k));

    int last = sched.closed() ? *sched.i_star - 1 : sched.iterations() - 1;
    size_t colored_total = 0;
    for (int i = 1; i <= last; ++i) {
        auto [next_target, next_exhausted] = sched.integer_view(i + 1);
        if (next_exhausted) {
            out.state.halted_early = true;
            break;
        }
        auto t0 = std::chrono::steady_clock::now();
        int retries = 0;
        BadEventLog log;
        std::vector<uint32_t> newly;
        PropertyReport post;
        if (mode == NibbleMode::Theory) {
            for (;;) {
                ListState attempt = out.state;
                PartialColoring phi_attempt = out.coloring;
                newly.clear();
                log = nibble_iteration(attempt, sched, seed, retries, &newly, &phi_attempt);
                trim(attempt, next_target);
                attempt.iteration = i + 1;
                post = check_properties(attempt, fx, fm, sched, i + 1);
                if (post.all_pass) {
                    out.state = std::move(attempt);
                    out.coloring = std::move(phi_attempt);
                    break;
                }
                if (++retries > retry_budget) throw TheoryModeFailure(post, i);
            }
        } else {
            log = nibble_iteration(out.state, sched, seed, 0, &newly, &out.coloring);
            trim(out.state, next_target);
            out.state.iteration = i + 1;
        }
        colored_total += newly.size();

        TraceRecord rec;
        rec.i = i;
        rec.colored_round = newly.size();
        rec.colored_total = colored_total;
        rec.retries = retries;
        rec.keep_pred = static_cast<double>(sched.at(sched.keep, i));
        rec.keep_emp = log.mean_pretrim_list / static_cast<double>(sched.at(sched.L, i));
        size_t nun = 0, mn = SIZE_MAX, mx = 0, sum = 0, mt = 0;
        for (uint32_t v = 0; v < n; ++v) {
            if (!out.state.uncolored[v]) continue;
            ++nun;
            size_t sz = out.state.list_size[v];
            mn = std::min(mn, sz);
            mx = std::max(mx, sz);
            sum += sz;
            size_t base = v * static_cast<size_t>(out.state.palette);
            for (int c : out.state.list_of(v))
                mt = std::max(mt, static_cast<size_t>(out.state.tcount[base + c]));
        }
        rec.n_uncolored = nun;
        rec.min_list = nun ? mn : 0;
        rec.max_list = mx;
        rec.mean_list = nun ? static_cast<double>(sum) / static_cast<double>(nun) : 0.0;
        rec.max_tvc = mt;
        rec.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0).count();
        out.trace.push_back(rec);
        if (nun == 0) break;
    }
    return out;
}

std::string trace_csv(const std::vector<TraceRecord>& trace) {
    std::ostringstream out;
    out << "i,n_uncolored,min_list,mean_list,max_list,max_tvc,keep_pred,keep_emp,"
           "colored_round,retries\n";
    for (const auto& r : trace) {
        out << r.i << "," << r.n_uncolored << "," << r.min_list << "," << r.mean_list << ","
            << r.max_list << "," << r.max_tvc << "," << r.keep_pred << "," << r.keep_emp << ","
            << r.colored_round << "," << r.retries << "\n";
    }
    return out.str();
}

}  // namespace sc
