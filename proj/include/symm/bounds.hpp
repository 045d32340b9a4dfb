#pragma once

#include <map>
#include <string>
#include <vector>

#include "symm/characters.hpp"
#include "symm/harmonic.hpp"

namespace symm {

// outcome of one verification or constant-fitting sweep
struct BoundReport {
    std::string theorem;  // id used by the CLI and the lock file
    std::string params;   // swept ranges
    long long instances = 0;
    long long failures = 0;  // hard-assert violations
    std::map<std::string, double> constants;
    std::string lock_tag;  // prefix for lock-file keys, empty when nothing is locked
    std::string witness;   // instance attaining the extremal constant
    std::vector<std::string> notes;
    bool pass() const { return failures == 0; }
};

// (C q / log q)^d (d^d dim / n^d)^(1 - 2/q); the trivial bound 1 at q = 2 or d = 0
double main_bound_rhs(int n, int d, double q, const Int& dim, double C);

// sandwiches exact q-norms between the upper and lower envelope shapes and
// fits the extremal constants C (upper) and c (lower)
BoundReport fit_main_bound(CharacterEvaluator& ev, int n_min, int n_max, int d_max,
                           const std::vector<unsigned>& q_set);

// character-ratio bounds against cycle count (fitted c) and class density
// (fitted C); each instance inverts the hypothesis for the alpha making it
// tight instead of sweeping an arbitrary alpha grid; the alpha argument only
// feeds the companion note evaluated at that fixed alpha
BoundReport ratio_bound_check(CharacterEvaluator& ev, int n, double alpha = 0.5);

// witness families: many fixed points plus one long cycle; exact ratio via
// the long-cycle identity, fitted lower-bound constants
BoundReport ratio_lower_construction(CharacterEvaluator& ev, int n, double alpha, double eps);

// Fourier coefficients of normalized class indicators against the log M
// envelope, the three regime envelopes, and the eps^d envelope
BoundReport fourier_coeff_bound_check(CharacterEvaluator& ev, int n);

// probability that a uniform permutation of S_r has all cycles longer than d
Rat no_short_cycles_prob(int r, int d);

// exact sweep of no_short_cycles_prob >= 1/(10d) over 1 <= d < r <= r_max
BoundReport prob_recursion_check(int r_max);

// dimension bounds: binomial sandwich and n^d/sqrt(d!) exactly for n <= n_max,
// and the (n/(e d))^d lower bound at n in {200,400,600}, d <= 5
BoundReport dim_bounds_check(int n_max);

// branching sums against 2^m * tilde dimension for n <= n_max, plus exact
// coset-norm chains at small n
BoundReport branching_chain_check(CharacterEvaluator& ev, int n_max, int brute_n_max);

// chi(many fixed points + long cycles) equals the dimension of the clipped
// shape, exactly, over every valid (lambda, ell) for n <= n_max
BoundReport long_cycle_identity_check(CharacterEvaluator& ev, int n_max);

// exact Kronecker coefficients against the three Hoelder-style bounds
BoundReport kronecker_bounds_check(CharacterEvaluator& ev, int n, int level_cap);

struct VerifyOptions {
    std::string theorem = "all";
    int n_max = 10;
    std::string json_out;  // empty: no JSON file
    std::string lock_path = "constants.lock";
    bool update_locks = false;
    int threads = 0;
};

// runs the selected sweeps, prints one line per report, reconciles fitted
// constants with the lock file; 0 = pass, 1 = hard failure or lock drift,
// 2 = bad options
int run_verify(const VerifyOptions& opt);

}  // namespace symm
