#pragma once

// Roots of unity as rationals mod 1, normalized U(1)-valued 2-cocycles and
// the torsion 1-cocycle they induce on the inertia groupoid.

#include "orbistring/cyclotomic.hpp"
#include "orbistring/group.hpp"
#include "orbistring/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace orbistring {

/// exp(2 pi i q), q kept in [0, 1).
class Phase {
public:
    Phase() = default;
    explicit Phase(const Rational& q) : q_(mod_one(q)) {}
    static Phase from_fraction(long num, long den) { return Phase(make_rational(num, den)); }

    const Rational& q() const { return q_; }
    bool is_one() const { return q_ == 0; }
    /// Smallest N with q = a/N.
    int level() const { return static_cast<int>(q_.get_den().get_si()); }
    Phase inverse() const { return Phase(-q_); }
    CycloNumber to_cyclo() const;
    CycloNumber to_cyclo(int level) const;

    friend Phase operator*(const Phase& a, const Phase& b) { return Phase(a.q_ + b.q_); }
    friend Phase operator/(const Phase& a, const Phase& b) { return Phase(a.q_ - b.q_); }
    Phase& operator*=(const Phase& o) { return *this = *this * o; }
    friend bool operator==(const Phase& a, const Phase& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }

    std::string to_string() const { return q_.get_str(); }

private:
    Rational q_{0};
};

using PhaseTable = std::vector<std::vector<Phase>>;

class CocycleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CocycleReport {
    bool valid = true;
    std::string reason;
    /// (g, h, k) for the cocycle identity; (g, e, e) or (e, g, e) when the
    /// normalization is what fails.
    std::optional<std::array<Element, 3>> witness;
};

/// Checks alpha(g,h) alpha(gh,k) = alpha(g,hk) alpha(h,k) and alpha(e,g) =
/// alpha(g,e) = 1. Throws std::invalid_argument on a size mismatch.
CocycleReport is_two_cocycle(const FiniteGroup& group, const PhaseTable& table);

class TwoCocycle {
public:
    /// Trivial cocycle.
    explicit TwoCocycle(FiniteGroup group);
    /// Divides by alpha(e,e) if needed, then validates; throws CocycleError.
    static TwoCocycle from_table(FiniteGroup group, PhaseTable table);

    const FiniteGroup& group() const { return group_; }
    const Phase& operator()(Element g, Element h) const { return table_[g][h]; }
    const PhaseTable& table() const { return table_; }
    /// lcm of the denominators of all values.
    int level() const;

    friend TwoCocycle operator*(const TwoCocycle& a, const TwoCocycle& b);

private:
    TwoCocycle(FiniteGroup group, PhaseTable table) : group_(std::move(group)), table_(std::move(table)) {}
    FiniteGroup group_;
    PhaseTable table_;
};

/// (delta beta)(g,h) = beta(g) beta(h) / beta(gh). Requires beta(e) = 1.
TwoCocycle coboundary(const FiniteGroup& group, const std::vector<Phase>& beta);

/// tau(g,h) = alpha(g,h) / alpha(h, h^-1 g h), an arrow g -> h^-1 g h.
class TorsionCocycle {
public:
    const FiniteGroup& group() const { return group_; }
    const Phase& operator()(Element g, Element h) const { return tau_[g][h]; }
    const PhaseTable& table() const { return tau_; }
    int level() const;

    /// First (g,h,k) with tau(g,hk) != tau(g,h) tau(h^-1gh,k), if any.
    std::optional<std::array<Element, 3>> groupoid_law_violation() const;

private:
    friend TorsionCocycle discrete_torsion(const TwoCocycle& alpha);
    FiniteGroup group_;
    PhaseTable tau_;
};

TorsionCocycle discrete_torsion(const TwoCocycle& alpha);

struct Character {
    Element g = 0;
    std::vector<Element> domain;  // C(g), sorted
    std::vector<Phase> values;
    bool trivial() const;
};

/// h -> tau(g,h) on C(g); throws CocycleError if it is not a homomorphism.
Character restrict_to_centralizer(const TorsionCocycle& tau, Element g);

/// tau(g, .) trivial on C(g).
bool is_alpha_regular(const TorsionCocycle& tau, Element g);

/// "trivial" and "coboundary" for every group, "nontrivial" for Z2xZ2.
std::vector<std::string> catalog_cocycle_names(const FiniteGroup& group);
TwoCocycle catalog_cocycle(const FiniteGroup& group, const std::string& name);

}  // namespace orbistring
