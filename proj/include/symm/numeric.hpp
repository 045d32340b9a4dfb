#pragma once

#include <gmpxx.h>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symm {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// exact quotient; throws if b does not divide a
inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: not divisible");
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// natural log of a positive big integer, safe for values far beyond double range
inline double log_int(const Int& x) {
    if (x <= 0) throw std::domain_error("log_int: nonpositive");
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(m) + static_cast<double>(exp2) * 0.6931471805599453;
}

inline double log_rat(const Rat& q) {
    if (q <= 0) throw std::domain_error("log_rat: nonpositive");
    return log_int(Int(q.get_num())) - log_int(Int(q.get_den()));
}

inline std::string to_decimal(const Int& x) { return x.get_str(); }

// sign of a^pnum - b^pden style comparisons are done by callers; here only the
// guard-band comparator used for float-path inequality checks.
// returns +1 if lhs > rhs outside the band, -1 if lhs < rhs outside the band,
// 0 when the two are within rel_guard of each other (caller re-checks exactly
// or at extended precision).
inline int guarded_compare(double lhs, double rhs, double rel_guard = 1e-9) {
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    if (lhs - rhs > rel_guard * scale) return 1;
    if (rhs - lhs > rel_guard * scale) return -1;
    return 0;
}

}  // namespace symm
