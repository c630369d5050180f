#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fast {

/// Exact rational arithmetic for formula/oracle equality tests. GMP's
/// mpq_class keeps values in reduced form with a positive denominator,
/// which is exactly the invariant the analytic checks rely on.
using Rational = mpq_class;

inline Rational rational(long num, unsigned long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// 2^exp as an exact rational; exp may be negative.
inline Rational pow2(long exp) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, static_cast<unsigned long>(exp < 0 ? -exp : exp));
    return exp < 0 ? Rational(1, z) : Rational(z, 1);
}

/// Binomial coefficient C(n, k) as an exact integer.
inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return z;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// "num/den" (or just "num" when the denominator is 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace fast
