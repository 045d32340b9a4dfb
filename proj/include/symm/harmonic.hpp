#pragma once

#include <string>
#include <vector>

#include "symm/characters.hpp"
#include "symm/class_function.hpp"
#include "symm/numeric.hpp"
#include "symm/partition.hpp"

namespace symm {

// Spectral expansion of a class function over irreducible characters.
// For group A the labels are one partition per restricted irreducible:
// the canonical member of each pair {lambda, conjugate} plus every
// self-conjugate lambda. A self-conjugate label stands for the two split
// irreducibles through the aggregate coefficient <f, chi_lambda restricted>;
// its weight 1/2 makes every spectral sum below come out exactly right for
// the S_n-invariant functions this module admits.
struct FourierExpansion {
    Group group = Group::S;
    int n = 0;
    std::vector<Partition> labels;
    std::vector<Rat> coeffs;   // f_hat per label (aggregate for split labels)
    std::vector<Rat> weights;  // 1, or 1/2 for a split (self-conjugate) label
    std::vector<Int> dims;     // dimension of chi_lambda in S_n

    Rat parseval() const;  // sum w * coeff^2 == l2_norm_sq(f), exact
    size_t trivial_index() const;  // position of the label (n)
};

// label set alone (no coefficients); order follows canonical partition order
std::vector<Partition> spectrum_labels(Group g, int n);

FourierExpansion expand(CharacterEvaluator& ev, const ClassFunction& f);
ClassFunction synthesize(CharacterEvaluator& ev, const FourierExpansion& fe);

Rat fourier_coefficient(CharacterEvaluator& ev, const ClassFunction& f, const Partition& lambda);

// ||chi_lambda||_q over the given group; exact q-th power for even q
Rat q_norm_exact_pow(CharacterEvaluator& ev, Group g, const Partition& lambda, unsigned q);
double q_norm(CharacterEvaluator& ev, Group g, const Partition& lambda, double q);

// convolution through the spectrum: (f conv g)^hat = f_hat g_hat / dim
ClassFunction convolve(CharacterEvaluator& ev, const ClassFunction& f, const ClassFunction& g);

// g(lambda, mu, nu) = E[chi chi chi], validated nonnegative integer
Int kronecker(CharacterEvaluator& ev, const Partition& lambda, const Partition& mu,
              const Partition& nu);

// squared L2 norm of the restriction of chi_lambda to the subgroup fixing m points
Int restriction_norm_sq(CharacterEvaluator& ev, const Partition& lambda, int m);
double restriction_norm(CharacterEvaluator& ev, const Partition& lambda, int m);

// exact squared coset norm by enumerating the (n-m)! permutations mapping
// tuple I to tuple J pointwise; entries are 0-based and distinct
Rat coset_restriction_norm_sq_bruteforce(CharacterEvaluator& ev, const Partition& lambda,
                                         const std::vector<int>& I, const std::vector<int>& J);
double coset_restriction_norm_bruteforce(CharacterEvaluator& ev, const Partition& lambda,
                                         const std::vector<int>& I, const std::vector<int>& J);

struct GlobalnessReport {
    Partition lambda;
    int level = 0;
    Int tilde_dim;
    std::vector<Int> branching_sums;  // B(m) = sum of c_mu, m = 0..n-1
    bool chain_ok = false;            // B(m) <= 2^m * tilde_dim for every m
    bool brute_ok = true;             // sampled coset norms <= B(m), n <= 8 only
    long long brute_pairs = 0;
    double gamma_constant = 0.0;  // minimal C with (C d / n)^d dim >= B(m)/2^m
    std::string to_string() const;
};

GlobalnessReport globalness_certificate(CharacterEvaluator& ev, const Partition& lambda,
                                        bool brute = false, int sample_cap = 200,
                                        uint64_t seed = 0x5EED);

}  // namespace symm
