#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sc {

// Parameter trajectory of the wasteful coloring procedure. With K = eps/1000
// and eta = K/ln(Delta):
//
//   L_1 = (1+eps) Delta / ln Delta          T_1 = Delta
//   keep_i = (1 - eta/L_i)^{T_i}
//   L_{i+1} = L_i keep_i (1 - ln^{-2} Delta)
//   T_{i+1} = T_i keep_i (1 - eta keep_i) (1 + ln^{-2} Delta)
//   Q_1 = gamma Delta / (10 ln^{18} Delta)  B_1 = Delta (gamma - ln^{-2} Delta)
//   Q, B recur with T's multiplier;         X_i = T_i^gamma, r_i = T_i/L_i
//
// and i* = min{ i : L_i >= 8 T_i }. Iteration stops at i* or at a hard cap
// of 10 ln^{3/2} Delta steps, whichever comes first. Natural logarithm
// throughout; keep_i is evaluated as exp(T_i * log1p(-eta/L_i)) in extended
// precision to avoid cancellation.
struct Schedule {
    double delta = 0;
    double epsilon = 0;
    double gamma = 0;
    long double K = 0;
    long double eta = 0;
    // index 0 holds i = 1.
    std::vector<long double> L, T, keep, Q, X, B, r;
    std::optional<int> i_star;  // empty when the cap was reached first
    bool closed() const { return i_star.has_value(); }
    int iterations() const { return static_cast<int>(L.size()); }
    bool epsilon_warning = false;  // eps outside (0,1)

    long double at(const std::vector<long double>& a, int i) const { return a.at(i - 1); }

    // floor(L_i), with a warning flag when the schedule is exhausted.
    std::pair<long long, bool> integer_view(int i) const;
};

// Throws for Delta < 3 (needs ln Delta > 1) or gamma outside (0,1).
// Epsilon above 1 is permitted and flagged.
Schedule build_schedule(double delta, double epsilon, double gamma);

struct PropertyCheck {
    std::string id;
    bool pass = true;
    int first_failure = 0;  // i of first failing index, 0 if none
    std::string note;
};

struct ScheduleReport {
    std::vector<PropertyCheck> items;
    bool all_pass = false;
    std::string to_json() const;
};

// Numeric verification of the trajectory properties at every i <= i*:
//   (i)    keep_i >= keep_1 > e^{-K}
//   (ii)   r_i <= r_1 (1 - eta keep_1)^{i-1} exp(4(i-1) ln^{-2} Delta)
//   (iii)  L_i > 10 Delta^{eps/2}
//   (iv)   T_i > Delta^{eps/2}
//   (v)    B_i/T_i = gamma - ln^{-2} Delta      (identity, 1e-10 relative)
//   (vi)   T_i/Q_i = (10/gamma) ln^{18} Delta   (identity, 1e-10 relative)
//   (vii)  B_i/Q_i > 5 ln^{18} Delta
//   (viii) Q_i/X_i > Delta^{(1-gamma) eps/3}
// plus A_{i+1} <= A_i <= 2 A_{i+1} for A in {B,L,Q,T,X} and the stopping
// bound i* <= ln^{3/2} Delta. On a non-closed schedule the items are
// evaluated over the computed prefix and "closure" fails.
ScheduleReport verify_schedule_properties(const Schedule& s);

std::string schedule_csv(const Schedule& s);

}  // namespace sc
