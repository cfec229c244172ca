// rational.hpp: exact coefficient arithmetic.
//
// Coefficients are arbitrary-precision rationals backed by GMP. mpq_class keeps
// results canonical (lowest terms, positive denominator, 0 == 0/1) through all
// arithmetic; construction from raw num/den goes through make_rational so the
// canonical-form invariant holds from the start.
#ifndef NULLKIT_RATIONAL_HPP
#define NULLKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace nullkit {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// GMP classes take long, not long long; on this target the cast is lossless.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace nullkit

#endif
