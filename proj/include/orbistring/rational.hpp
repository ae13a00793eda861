#pragma once

// Exact rationals backed by GMP, plus the few helpers every module needs.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace orbistring {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Representative of r modulo 1 in [0, 1).
inline Rational mod_one(const Rational& r)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rational out = r - Rational(fl);
    out.canonicalize();
    return out;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "a", "a/b" or "-a/b". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace orbistring
