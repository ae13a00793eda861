#pragma once

// The orbifold string ring of a finite G-set (the zero-dimensional model),
// the Dijkgraaf-Witten algebra, twisted centers and Morita comparison.

#include "orbistring/group.hpp"
#include "orbistring/linalg.hpp"
#include "orbistring/phase.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbistring {

class SectorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Twisted sector (g, x) with x in Fix(g).
using SectorPair = std::pair<Element, int>;

/// All pairs (g, x) with x.g = x, lexicographic.
std::vector<SectorPair> sector_basis(const GSet& X);

/// (g,x).(h,y) = (gh, x) if x == y, else nothing. Throws SectorError when an
/// argument is not a sector element.
std::optional<SectorPair> sector_product(const GSet& X, SectorPair a, SectorPair b);

/// (g,x).h = (h^-1 g h, x.h)
SectorPair sector_act(const GSet& X, SectorPair a, Element h);

/// Finite-dimensional algebra over Q(zeta_level) by structure constants
/// e_i e_j = sum_k c(i,j,k) e_k. Everything sits in degree 0.
class SectorRing {
public:
    SectorRing() = default;
    SectorRing(std::vector<std::string> basis, int level);

    int dim() const { return static_cast<int>(basis_.size()); }
    int level() const { return level_; }
    const std::vector<std::string>& basis() const { return basis_; }

    const CycloNumber& c(int i, int j, int k) const { return c_[index(i, j, k)]; }
    void set_c(int i, int j, int k, CycloNumber v) { c_[index(i, j, k)] = std::move(v); }

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec basis_vector(int i) const;
    /// Matrix of x -> e_i x, columns indexed by input basis.
    Matrix left_multiplication(const Vec& a) const;

    const Vec& unit() const { return unit_; }
    void set_unit(Vec u) { unit_ = std::move(u); }
    const std::optional<Vec>& trace() const { return trace_; }
    void set_trace(Vec t) { trace_ = std::move(t); }

    std::optional<std::array<int, 3>> associativity_violation() const;
    bool unit_law_holds() const;
    bool is_commutative() const;
    bool is_rational() const;
    /// Gram matrix trace(e_i e_j).
    Matrix pairing_matrix() const;
    bool frobenius_nondegenerate() const;

private:
    std::size_t index(int i, int j, int k) const
    {
        return (static_cast<std::size_t>(i) * basis_.size() + j) * basis_.size() + k;
    }
    std::vector<std::string> basis_;
    int level_ = 1;
    std::vector<CycloNumber> c_;
    Vec unit_;
    std::optional<Vec> trace_;
};

/// G-orbits of sector pairs, each sorted, ordered by least member.
std::vector<std::vector<SectorPair>> sector_orbits(const GSet& X);

/// Ring of G-invariants of the sector space on the orbit-sum basis. The
/// product is the sectorwise product restricted to invariants, so the unit
/// is the sum of all (e, x) and for a point this is the class algebra.
/// Trace: coefficient of the e-sector divided by |G|.
SectorRing orbifold_string_ring(const GSet& X);

/// Z(Q[G]) on class sums with trace = identity coefficient / |G|.
SectorRing dw_frobenius(const FiniteGroup& group);

/// Centre of the alpha-twisted group algebra over Q(zeta_N), basis
/// S_g = sum over C(g)\G of tau(g,h) u_{h^-1 g h} for alpha-regular class
/// representatives g.
SectorRing twisted_center(const TwoCocycle& alpha);

/// Conjugacy class representatives that are alpha-regular.
std::vector<Element> alpha_regular_classes(const TwoCocycle& alpha);

/// Checks that basis images m[i] in B define a unital algebra isomorphism.
bool is_algebra_isomorphism(const SectorRing& a, const SectorRing& b, const Matrix& images);

struct MoritaReport {
    enum class Verdict { isomorphic, not_isomorphic, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    int dim_x = 0;
    int dim_y = 0;
    std::string method;
    std::string reason;
    SectorRing ring_x;
    SectorRing ring_y;
    /// images[i] = image of basis element i of ring_x in ring_y
    std::optional<Matrix> witness;
};

std::string to_string(MoritaReport::Verdict v);

MoritaReport compare_rings(const SectorRing& a, const SectorRing& b);
MoritaReport morita_compare(const GSet& X, const GSet& Y);

}  // namespace orbistring
