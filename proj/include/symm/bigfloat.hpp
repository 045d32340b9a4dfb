#pragma once

#include <mpfr.h>

#include "symm/numeric.hpp"

namespace symm {

// minimal 256-bit float used to settle comparisons that land inside the
// double-precision guard band
class BigFloat {
public:
    static constexpr mpfr_prec_t kPrec = 256;

    BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    explicit BigFloat(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit BigFloat(const Int& z) { mpfr_init2(v_, kPrec); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    explicit BigFloat(const Rat& q) { mpfr_init2(v_, kPrec); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat log(const Int& z) {
        BigFloat x(z), r;
        mpfr_log(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat log(const Rat& q) {
        BigFloat x(q), r;
        mpfr_log(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat log(const BigFloat& x) {
        BigFloat r;
        mpfr_log(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    BigFloat operator+(const BigFloat& o) const { BigFloat r; mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator-(const BigFloat& o) const { BigFloat r; mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator*(const BigFloat& o) const { BigFloat r; mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator/(const BigFloat& o) const { BigFloat r; mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

}  // namespace symm
