#pragma once

// Graded-commutative algebras over Q presented by generators with integer
// degrees and two kinds of relations: monomials that vanish (odd squares are
// always zero) and v^p = 1 for chosen even degree-0 generators. Elements are
// sparse maps from exponent vectors to coefficients.

#include "orbistring/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbistring {

class GradedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rational>;

struct Generator {
    std::string name;
    int degree = 0;
    int root_order = 0;  // p > 0 imposes name^p = 1
};

class GradedAlgebra {
public:
    GradedAlgebra(std::string name, std::vector<Generator> gens, std::vector<Monomial> annihilators = {});

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Monomial>& annihilators() const { return zero_; }
    int size() const { return static_cast<int>(gens_.size()); }
    bool is_odd(int gen) const { return (gens_[gen].degree % 2 + 2) % 2 == 1; }

    int degree(const Monomial& m) const;
    /// Reduces exponents of root-of-unity generators; nullopt if the
    /// monomial is zero in the algebra.
    std::optional<Monomial> normal_form(Monomial m) const;

    Poly one() const;
    Poly generator(int gen) const;
    Poly generator(const std::string& name) const;
    Poly monomial(const Monomial& m, const Rational& c = 1) const;

    /// Product with Koszul signs.
    Poly multiply(const Poly& a, const Poly& b) const;
    Poly multiply_monomials(const Monomial& a, const Monomial& b) const;
    Poly power(const Poly& a, int k) const;

    /// Normal-form monomials with degree in [lo, hi], sorted by degree then
    /// exponents. Throws when the window holds infinitely many.
    std::vector<Monomial> basis(int lo, int hi) const;

    std::string to_string(const Monomial& m) const;
    std::string to_string(const Poly& p) const;
    /// Parses "a*u^2*v" or "1".
    Monomial parse_monomial(const std::string& text) const;

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::vector<Monomial> zero_;
};

Poly add(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
bool is_zero(const Poly& a);

/// Lambda[a] (x) Q[u,v]/(v^p = 1), |a| = -n, |u| = n-1, |v| = 0. n must be odd.
GradedAlgebra lens_ring(int n, int p);

/// Lambda[b] (x) Q[a,v,y]/(a^2, ab, av, y^p - 1), |b| = 1, |a| = -2,
/// |v| = 2, |y| = 0.
GradedAlgebra sphere_quotient_ring(int p);

}  // namespace orbistring
