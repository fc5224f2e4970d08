#pragma once
#ifndef OHS_COUNTING_HPP
#define OHS_COUNTING_HPP

#include <gmpxx.h>

#include <span>

#include "error.hpp"
#include "rational.hpp"

namespace ohs {

/// C(n, k) exactly; 0 when k > n.
inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// C(n, k) for the small counts used as dimensions. Throws if it does not fit.
inline std::size_t binomial_count(long n, long k) {
    if (n < 0 || k < 0) throw InvalidArgument("binomial with negative argument");
    const mpz_class r = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!r.fits_ulong_p()) throw InvalidArgument("binomial too large for a count");
    return r.get_ui();
}

/// n! / prod(parts_i!) where n = sum(parts).
inline mpz_class multinomial(std::span<const int> parts) {
    mpz_class out = 1;
    unsigned long total = 0;
    for (int p : parts) {
        if (p < 0) throw InvalidArgument("multinomial with negative part");
        total += static_cast<unsigned long>(p);
        out *= binomial(total, static_cast<unsigned long>(p));
    }
    return out;
}

inline Rational power(const Rational& base, int exponent) {
    if (exponent < 0) throw InvalidArgument("negative exponent");
    Rational out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace ohs

#endif  // OHS_COUNTING_HPP
