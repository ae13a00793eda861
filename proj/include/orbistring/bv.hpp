#pragma once

// Batalin-Vilkovisky checks on a finite window of a graded algebra. The
// bracket is
//   {x,y} = (-1)^|x| D(xy) - (-1)^|x| D(x) y - x D(y)
// and the derivation identity is checked with the sign
//   {x, yz} = {x,y} z + (-1)^((|x|+1)|y|) y {x,z}.

#include "orbistring/graded.hpp"
#include "orbistring/sector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbistring {

using Vector = std::vector<Rational>;

/// Basis of a degree window with every product that stays inside it.
struct TruncatedAlgebra {
    std::string name;
    std::vector<std::string> names;
    std::vector<int> degree;
    int lo = 0, hi = 0;
    /// product[i][j]: e_i e_j, or nullopt when its degree leaves the window
    std::vector<std::vector<std::optional<Vector>>> product;

    int dim() const { return static_cast<int>(names.size()); }
    int index(const std::string& name) const;
    std::optional<Vector> multiply(const Vector& x, const Vector& y) const;
    Vector basis_vector(int i) const;
    std::string to_string(const Vector& v) const;
};

TruncatedAlgebra truncate(const GradedAlgebra& A, int lo, int hi);
/// A rational sector ring, concentrated in degree 0.
TruncatedAlgebra truncate(const SectorRing& R);

struct BVData {
    TruncatedAlgebra algebra;
    /// delta[i] is the image of e_i. Images of the top degree are unknown
    /// and never used.
    std::vector<Vector> delta;
};

BVData zero_delta(TruncatedAlgebra A);

/// Nullopt when something leaves the window. Arguments are homogeneous
/// of the given degrees.
std::optional<Vector> apply_delta(const BVData& D, const Vector& x);
std::optional<Vector> bracket(const BVData& D, const Vector& x, int dx, const Vector& y, int dy);

struct BVReport {
    bool pass = true;
    std::string axiom;    // "degree", "delta squared", "antisymmetry", "Jacobi", "Leibniz"
    std::string witness;
    long checked = 0;
    long skipped = 0;
};

BVReport bv_check(const BVData& D);

}  // namespace orbistring
