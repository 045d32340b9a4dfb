#pragma once

#include <utility>
#include <vector>

#include "symm/harmonic.hpp"

namespace symm {

struct MixingProfile {
    Group group = Group::S;
    int n = 0;
    std::vector<Rat> dist_sq;  // dist_sq[l-1] = ||f^{*l} - 1||_2^2, exact
};

// ||f^{*ell} - 1||_2^2 through the spectrum; requires ||f||_1 = 1
Rat spectral_l2_distance_sq(CharacterEvaluator& ev, const ClassFunction& f, unsigned ell);
double spectral_l2_distance(CharacterEvaluator& ev, const ClassFunction& f, unsigned ell);

MixingProfile mixing_profile(CharacterEvaluator& ev, const ClassFunction& f, int steps);

// minimal ell <= cap with ||f^{*ell} - 1||_p < eps (p = 1 or 2); -1 if the
// cap is exceeded
int mixing_time(CharacterEvaluator& ev, const ClassFunction& f, double eps, int p, int cap = 64);

// ||f_1 * ... * f_k - 1||_2^2 for class functions on a common group
Rat multi_convolution_distance_sq(CharacterEvaluator& ev, const std::vector<ClassFunction>& fs);

// (f*f evaluated at the identity, ||f*f - 1||_2); asserts the return value
// equals ||f||_2^2 exactly, which is the two-step return identity for the
// symmetric (cycle-type-indexed) functions this module admits
std::pair<Rat, double> two_step_return(CharacterEvaluator& ev, const ClassFunction& f);

// slow-mixing witness for an ell-step walk: m = floor(n^(1-1/ell)) fixed
// points plus one (n-m)-cycle, with m bumped by one when the permutation
// would be odd
CycleType lower_bound_walk(int n, int ell);

// <f*g, h> - 1 for normalized indicators of normal sets
Rat product_mixing_lhs(CharacterEvaluator& ev, const ClassFunction& f, const ClassFunction& g,
                       const ClassFunction& h);

// the product-mixing sharpness class: t fixed points and a single (n-t)-cycle,
// where t is the largest value compatible with this n (capped by the
// 10 n^(1/3) + 1 recipe, which only bites once n is large); always even
CycleType non_mixer_witness(int n);

// nontrivial diagonal terms w * f_hat^3 / dim of <f*f, f> - 1 for labels of
// level <= level_cap
std::vector<std::pair<Partition, Rat>> triple_sum_terms(CharacterEvaluator& ev,
                                                        const ClassFunction& f, int level_cap);

}  // namespace symm
