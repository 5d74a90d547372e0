#pragma once

#include <cstdint>

#include "graph.hpp"

namespace sc {

struct SpectralResult {
    double lambda2 = 0;          // second largest signed eigenvalue
    double deflated_magnitude = 0;  // largest |eigenvalue| after removing the Perron value
    bool converged = false;
    size_t iterations = 0;
};

// Power iteration for the second eigenvalue of a d-regular graph's adjacency
// matrix: iterate on A + dI with the all-ones Perron vector deflated, which
// converges to lambda_2 + d. The residual bound ||Ax - rho x|| <= tol
// guarantees some eigenvalue within tol of the estimate. A second unshifted
// run reports the largest-magnitude eigenvalue after deflation for
// diagnostics. Rejects non-regular inputs; iteration cap 1e5.
SpectralResult second_eigenvalue(const Graph& g, double tol);

struct MixingCheck {
    double max_deviation = 0;          // max |e(S,T) - (d/n)|S||T||
    size_t standard_violations = 0;    // deviation > lambda*sqrt(|S||T|)
    size_t sqrt_form_violations = 0;   // deviation > sqrt(lambda*|S||T|)
    size_t pairs_checked = 0;
};

// Samples vertex subsets S, T and compares the edge-count deviation against
// both the standard mixing bound lambda*sqrt(|S||T|) and the sqrt-form
// sqrt(lambda*|S||T|). e(S,T) counts ordered pairs. trials = 0 with
// n <= 20 checks every pair of subsets exhaustively.
MixingCheck expander_mixing_check(const Graph& g, double lambda, size_t trials, uint64_t seed);

}  // namespace sc
