#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>

namespace overpart {

// Arbitrary-precision integer backing all exact coefficient arithmetic.
using Integer = mpz_class;

// Largest e with 2^e dividing x. Requires x != 0.
inline unsigned long v2(const Integer& x)
{
    assert(x != 0);
    return mpz_scan1(x.get_mpz_t(), 0);
}

inline Integer pow2(unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Canonical residue of x in [0, 2^k).
inline Integer mod_pow2(const Integer& x, unsigned k)
{
    Integer r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

inline bool divisible_by_pow2(const Integer& x, unsigned long e)
{
    return x == 0 || v2(x) >= e;
}

}  // namespace overpart
