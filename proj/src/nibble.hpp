#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conflict.hpp"
#include "schedule.hpp"
#include "structure.hpp"

namespace sc {

// Mutable state of the wasteful coloring procedure over a conflict graph:
// per-vertex color lists (bitmasks over the palette), uncolored flags, live
// adjacency (edges pruned once lists become disjoint), and maintained counts
// t(v,c) = number of live uncolored neighbors u of v with c in L(u).
struct ListState {
    const ConflictGraph* cg = nullptr;
    int iteration = 1;   // schedule index i of the current lists
    int palette = 0;     // k
    size_t words = 0;
    std::vector<uint64_t> bits;        // n * words list membership
    std::vector<uint32_t> list_size;
    std::vector<uint8_t> uncolored;
    std::vector<std::vector<uint32_t>> live;  // may hold colored ids; filter on flag
    std::vector<uint32_t> tcount;      // n * palette
    bool halted_early = false;         // schedule exhausted before its end

    size_t n() const { return list_size.size(); }
    bool has_color(uint32_t v, int c) const {
        return bits[v * words + c / 64] >> (c % 64) & 1;
    }
    uint32_t t(uint32_t v, int c) const { return tcount[v * static_cast<size_t>(palette) + c]; }
    std::vector<int> list_of(uint32_t v) const;
    size_t live_degree(uint32_t v) const;
    // Drops color c from v's list and fixes neighbor counts.
    void delete_color(uint32_t v, int c);
    // Flags v colored and removes its list from neighbor counts.
    void mark_colored(uint32_t v);
    void prune_edge(uint32_t u, uint32_t v);
};

// Every vertex uncolored with list {0..k-1}; live adjacency = full conflict
// adjacency.
ListState init_lists(const ConflictGraph& cg, int k);

// min{1, (1 - eta/L)^{T - t}}: the equalizing coin-flip survival chance.
double equalizing_probability(double eta, double L, double T, double t);

struct PartialColoring {
    std::vector<int> color;       // -1 = uncolored
    std::vector<int> colored_at;  // iteration index, -1 if never
};

struct BadEventLog {
    size_t activated = 0;
    size_t assignments = 0;
    size_t wasteful_deletions = 0;  // list removals from step N3
    size_t coin_deletions = 0;      // list removals from step N5
    size_t colored = 0;
    size_t list_shortfalls = 0;     // |L_{i+1}(v)| < floor(L_{i+1}) before trim
    double mean_pretrim_list = 0;   // over vertices left uncolored
};

// One nibble pass (steps N1-N5) at the state's current schedule index.
// Mutates the state in place; randomness is keyed by (seed, i, retry,
// vertex[, color]) so the result is a pure function of (state, schedule,
// seed, retry). Activation draws are made for every uncolored vertex, the
// equalizing coin uses t(v,c) as of the start of the pass, and N3 deletions
// are applied regardless of whether the assigner keeps its color.
BadEventLog nibble_iteration(ListState& ls, const Schedule& sched, uint64_t seed,
                             int retry, std::vector<uint32_t>* newly_colored = nullptr,
                             PartialColoring* phi = nullptr);

// Trim steps T1-T2: cut lists down to the target size (deleting highest
// t(v,c) first, tie-break larger color id) and prune live edges whose
// endpoint lists no longer intersect.
void trim(ListState& ls, long long list_target);

struct PropertyEntry {
    std::string id;       // P1..P6
    bool pass = true;
    size_t bad_events = 0;
    double worst_measured = 0;
    double bound = 0;
    std::string witness;
};

struct PropertyReport {
    std::vector<PropertyEntry> entries;
    bool all_pass = false;
    bool truncated = false;  // stranger-pair enumeration exceeded the budget
};

// Checks Property P(i) of the current lists: list-size equality, color
// degrees, stranger codegrees q(u,v,c), friend codegrees within B^X, set
// survivor counts |X_i(c)|, and B^X deficit t - b^X. Stranger pairs are
// enumerated through common live neighbors (others have q = 0); the scan
// stops and flags `truncated` after `pair_budget` pairs.
PropertyReport check_properties(const ListState& ls, const FamilyX& fx, const FriendModel& fm,
                                const Schedule& sched, int i,
                                size_t pair_budget = 50'000'000);

struct TraceRecord {
    int i = 0;
    size_t n_uncolored = 0;
    size_t min_list = 0;
    double mean_list = 0;
    size_t max_list = 0;
    size_t max_tvc = 0;
    double keep_pred = 0;
    double keep_emp = 0;   // mean pre-trim list size / schedule L_i
    size_t colored_round = 0;
    size_t colored_total = 0;
    int retries = 0;
    double wall_ms = 0;
};

enum class NibbleMode { Theory, Empirical };

struct NibbleResult {
    PartialColoring coloring;
    ListState state;
    std::vector<TraceRecord> trace;
};

// Thrown in theory mode when an iteration keeps violating P(i+1) after
// retry_budget redraws.
struct TheoryModeFailure : std::runtime_error {
    PropertyReport report;
    int iteration;
    TheoryModeFailure(PropertyReport r, int i)
        : std::runtime_error("property P(" + std::to_string(i + 1) +
                             ") still fails after retry budget"),
          report(std::move(r)), iteration(i) {}
};

// Runs iterations i = 1 .. i*-1 (or to the end of a non-closed schedule's
// trajectory), trimming after each pass. Theory mode re-draws an iteration
// with a fresh derived seed whenever P(i+1) fails; empirical mode logs and
// continues. Halts early when the next list target drops below 1.
NibbleResult run_nibble(const ConflictGraph& cg, const FamilyX& fx, const FriendModel& fm,
                        const Schedule& sched, NibbleMode mode, int retry_budget,
                        uint64_t seed);

std::string trace_csv(const std::vector<TraceRecord>& trace);

}  // namespace sc
