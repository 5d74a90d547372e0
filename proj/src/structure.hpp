#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "conflict.hpp"
#include "graph.hpp"

namespace sc {

// Symmetric reflexive friend relation over V(G), with the derived edge rule:
// two edges are friends iff some endpoint of one is a friend of some
// endpoint of the other (so incident edges are always friends).
struct FriendModel {
    const Graph* base = nullptr;
    double theta = 0.0;
    // Nonreflexive friend lists, sorted; reflexivity is implicit.
    std::vector<std::vector<Vertex>> vertex_friends;

    bool friends(Vertex u, Vertex v) const;
    bool edge_friends(EdgeId e, EdgeId f) const;
};

// Vertex-level friends: pairs with codegree >= theta (distance <= 2 suffices
// for codegree > 0). theta = +infinity yields the reflexive-only relation.
FriendModel vertex_friends(const Graph& g, double theta);

// Default threshold d / ln^40 d; clamps to +infinity when ln d <= 1, where
// the expression is meaningless at toy scale.
double default_friend_threshold(size_t max_degree);

// The family of covering sets: for each owner v, singleton sets {vw} for
// friend-neighbors w, and stranger-neighbor blocks (mutual strangers, built
// by an equitable partition of the friendship graph on N'(v)). Sets with at
// least two members carry B^X = edge_ring(owner, t+1). Kept as a multiset:
// duplicate member-sets from different owners stay distinct.
struct FamilyX {
    enum class Kind { Singleton, StrangerBlock };
    struct Set {
        Vertex owner;
        Kind kind;
        std::vector<EdgeId> members;           // conflict vertices (base edges)
        std::vector<EdgeId> bx;                // sorted, empty for singletons
    };
    std::vector<Set> sets;
    std::vector<std::vector<uint32_t>> membership;  // edge id -> set ids
};

FamilyX build_family_x(const Graph& g, const FriendModel& fm, int t);

// Equitable coloring of H with at most maxdeg(H)+1 classes: classes are
// independent sets whose sizes differ by at most one. Empty classes are not
// reported.
std::vector<std::vector<Vertex>> equitable_partition(const Graph& h);

struct CodegreeAudit {
    size_t max_codegree = 0;
    std::optional<std::pair<EdgeId, EdgeId>> argmax;
    bool vacuous = false;  // no stranger pair at conflict-distance <= 2
};

// Exact max conflict-codegree over stranger edge pairs; only pairs within
// conflict-distance 2 can have a common neighbor.
CodegreeAudit edge_strangers_codegree_audit(const ConflictGraph& cg, const FriendModel& fm);

struct ConditionEntry {
    std::string id;       // 1, 2a, 2b, 2c, 3a, 3b
    double measured = 0;
    double threshold = 0;
    double margin = 0;    // threshold - measured; conforming side is >= 0
    bool pass = false;
    bool vacuous = false;
};

struct ConditionReport {
    std::vector<ConditionEntry> entries;
    bool overall = false;
    bool thresholds_defined = true;  // false when log(max_degree) <= 1
    std::string to_json() const;
};

// Measures the six structural conditions (stranger codegrees, set sizes,
// covering family sizes, membership multiplicity, B^X degree deficits and
// B^X codegrees) against their thresholds at the conflict graph's max
// degree. Margins are reported even when the log-power thresholds are
// vacuous at small scale.
ConditionReport verify_general_conditions(const ConflictGraph& cg, const FriendModel& fm,
                                          const FamilyX& fx, double gamma, double epsilon,
                                          int bigN);

// (t-1)^{1/s} * n * m^{1-1/s} + (s-1) * m: edge bound for bipartite graphs
// with parts of sizes m and n and no K_{s,t} (t-side in the m-part).
double kst_bound(double m, double n, int s, int t);

// 100 k n^{1+1/k}: edge bound for C_{2k}-free graphs.
double bondy_simonovits_bound(double n, int k);

}  // namespace sc
