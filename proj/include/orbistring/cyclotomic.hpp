#pragma once

// Elements of the cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N), stored
// as rational polynomials in zeta of degree < phi(N), reduced modulo the N-th
// cyclotomic polynomial. Mixed-level arithmetic embeds both operands into
// Q(zeta_lcm).

#include "orbistring/rational.hpp"

#include <string>
#include <vector>

namespace orbistring {

int euler_phi(int n);

/// Integer coefficients of Phi_n, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int n);

class CycloNumber {
public:
    CycloNumber() : CycloNumber(Rational(0), 1) {}
    CycloNumber(const Rational& value, int level = 1);

    static CycloNumber zero(int level) { return CycloNumber(Rational(0), level); }

    /// zeta_level^a
    static CycloNumber zeta_power(int level, long a);
    /// Element given by an arbitrary coefficient list in zeta (reduced here).
    static CycloNumber from_polynomial(int level, std::vector<Rational> coeffs);

    int level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational to_rational() const;

    /// Same number in Q(zeta_new_level); new_level must be a multiple of level().
    CycloNumber embed(int new_level) const;

    CycloNumber inverse() const;

    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    CycloNumber& operator/=(const CycloNumber& o);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
    CycloNumber operator-() const;

    friend bool operator==(const CycloNumber& a, const CycloNumber& b);
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    /// "a0 + a1*z + a2*z^2 ..." with z = zeta_level; "0" for zero.
    std::string to_string() const;

private:
    int level_ = 1;
    std::vector<Rational> coeffs_;
};

/// Lowest level at which a phase with this denominator embeds.
int lcm_level(int a, int b);

}  // namespace orbistring
