#include "doctest.h"

#include <cmath>
#include <random>

#include "symm/mixing.hpp"
#include "perm_group.hpp"

using symm::CharacterEvaluator;
using symm::ClassFunction;
using symm::ClassList;
using symm::CycleType;
using symm::Group;
using symm::Int;
using symm::Partition;
using symm::Rat;

static CharacterEvaluator& ev() {
    static CharacterEvaluator e;
    return e;
}

// random probability density: nonnegative values with mean exactly 1
static ClassFunction random_density(Group g, int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    ClassFunction f(g, n);
    Rat mean(0);
    while (mean == 0) {
        for (int i = 0; i < f.size(); i++) {
            Rat x(static_cast<long>(rng() % 10), static_cast<long>(rng() % 9) + 1);
            x.canonicalize();
            f.set(i, x);
        }
        mean = f.mean();
    }
    f = f.scaled(Rat(1) / mean);
    return f;
}

TEST_CASE("spectral walk distance equals brute convolution power") {
    for (Group g : {Group::S, Group::A}) {
        for (int n = (g == Group::S ? 3 : 4); n <= 6; n++) {
            oracle::BruteAlgebra alg(g, n);
            ClassFunction one = ClassFunction::constant(g, n, Rat(1));
            for (uint64_t trial = 0; trial < 3; trial++) {
                ClassFunction f = random_density(g, n, 1000 * n + 10 * trial + (g == Group::A));
                ClassFunction walk = f;
                for (unsigned ell = 1; ell <= 4; ell++) {
                    if (ell > 1) walk = alg.convolve(walk, f);
                    CHECK(symm::spectral_l2_distance_sq(ev(), f, ell) ==
                          (walk - one).l2_norm_sq());
                }
            }
        }
    }
}

TEST_CASE("distance requires a unit l1 mass") {
    ClassFunction f = ClassFunction::constant(Group::S, 4, Rat(2));
    CHECK_THROWS(symm::spectral_l2_distance_sq(ev(), f, 1));
}

TEST_CASE("profile and mixing time agree") {
    // lazy transposition walk; the pure one is parity-blocked by the sign
    // character and never mixes
    ClassFunction f = ClassFunction::normalized_indicator(
        Group::S, 5, {CycleType::parse("1,1,1,1,1"), CycleType::parse("2,1,1,1")});
    auto prof = symm::mixing_profile(ev(), f, 8);
    CHECK(prof.dist_sq.size() == 8);
    for (unsigned ell = 1; ell <= 8; ell++)
        CHECK(prof.dist_sq[ell - 1] == symm::spectral_l2_distance_sq(ev(), f, ell));
    double eps = 0.5;
    int t2 = symm::mixing_time(ev(), f, eps, 2);
    REQUIRE(t2 > 1);
    REQUIRE(t2 <= 8);
    CHECK(std::sqrt(symm::to_double(prof.dist_sq[t2 - 1])) < eps);
    CHECK(std::sqrt(symm::to_double(prof.dist_sq[t2 - 2])) >= eps);
    // an L1 bound is never larger than the L2 bound, so L1 mixes no later
    int t1 = symm::mixing_time(ev(), f, eps, 1);
    REQUIRE(t1 > 0);
    CHECK(t1 <= t2);
    // transposition walk cannot mix in one step at tiny eps, cap kicks in
    CHECK(symm::mixing_time(ev(), f, 1e-30, 2, 2) == -1);
    CHECK_THROWS(symm::mixing_time(ev(), f, 0.5, 3));
}

TEST_CASE("multi convolution distance") {
    for (Group g : {Group::S, Group::A}) {
        int n = 5;
        oracle::BruteAlgebra alg(g, n);
        ClassFunction one = ClassFunction::constant(g, n, Rat(1));
        ClassFunction a = random_density(g, n, 12);
        ClassFunction b = random_density(g, n, 34);
        ClassFunction c = random_density(g, n, 56);
        ClassFunction prod = alg.convolve(alg.convolve(a, b), c);
        CHECK(symm::multi_convolution_distance_sq(ev(), {a, b, c}) ==
              (prod - one).l2_norm_sq());
        // repeated single function equals the walk distance
        CHECK(symm::multi_convolution_distance_sq(ev(), {a, a, a}) ==
              symm::spectral_l2_distance_sq(ev(), a, 3));
    }
    CHECK_THROWS(symm::multi_convolution_distance_sq(ev(), {}));
}

TEST_CASE("two step return identity") {
    for (int n = 4; n <= 6; n++) {
        ClassFunction f = random_density(Group::S, n, 90 + n);
        auto [ret, dist] = symm::two_step_return(ev(), f);
        CHECK(ret == f.l2_norm_sq());
        Rat dsq = symm::spectral_l2_distance_sq(ev(), f, 2);
        CHECK(dist == doctest::Approx(std::sqrt(symm::to_double(dsq))).epsilon(1e-12));
    }
}

TEST_CASE("slow mixing witness for the ell step walk") {
    // n = 9, ell = 2: m = floor(9^(1/2)) = 3, bumped if odd permutation;
    // (9-3)-cycle with 3 fixed points is odd (5 transpositions), so m -> 4
    CycleType w = symm::lower_bound_walk(9, 2);
    CHECK(w.n() == 9);
    CHECK(w.is_even());
    CHECK(w.fixed_points() == 4);
    CHECK(w.parts()[0] == 5);
    // the walk started at this class stays far from uniform after ell steps
    ClassFunction f = ClassFunction::normalized_class_indicator(Group::S, w);
    Rat d2 = symm::spectral_l2_distance_sq(ev(), f, 2);
    CHECK(d2 > Rat(1, 100));
    for (int n = 8; n <= 20; n++)
        for (int ell = 2; ell <= 4; ell++) {
            CycleType ct = symm::lower_bound_walk(n, ell);
            CHECK(ct.n() == n);
            CHECK(ct.is_even());
            CHECK(ct.cycles() == ct.fixed_points() + 1);
        }
}

TEST_CASE("product mixing lhs against double enumeration") {
    for (Group g : {Group::S, Group::A}) {
        for (int n = 4; n <= 5; n++) {
            ClassFunction a = random_density(g, n, 600 + n);
            ClassFunction b = random_density(g, n, 700 + n);
            ClassFunction c = random_density(g, n, 800 + n);
            Rat lhs = symm::product_mixing_lhs(ev(), a, b, c);
            Rat brute = oracle::brute_triple_expectation(g, a, b, c) - Rat(1);
            CHECK(lhs == brute);
        }
    }
}

TEST_CASE("sharpness witness class") {
    for (int n = 8; n <= 16; n++) {
        CycleType w = symm::non_mixer_witness(n);
        CHECK(w.n() == n);
        CHECK(w.is_even());
        CHECK(w.cycles() == w.fixed_points() + 1);
        CHECK(w.fixed_points() >= 1);
    }
    CHECK_THROWS(symm::non_mixer_witness(5));
}

TEST_CASE("triple sum terms filter by level") {
    int n = 9;
    CycleType w = symm::non_mixer_witness(n);
    ClassFunction f = ClassFunction::normalized_class_indicator(Group::S, w);
    int cap = 2;
    auto terms = symm::triple_sum_terms(ev(), f, cap);
    CHECK(!terms.empty());
    Rat total(0);
    for (const auto& [lam, val] : terms) {
        CHECK(lam.level() <= cap);
        CHECK(lam != Partition({n}));
        total += val;
    }
    // the full-level sum telescopes to <f*f, f> - 1
    auto all_terms = symm::triple_sum_terms(ev(), f, n);
    Rat full(0);
    for (const auto& [lam, val] : all_terms) full += val;
    CHECK(full == symm::product_mixing_lhs(ev(), f, f, f));
}
