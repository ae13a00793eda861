#pragma once

// Dense exact linear algebra over Q(zeta_N). Matrices are row-major vectors
// of rows; sizes here never exceed a few dozen.

#include "orbistring/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace orbistring {

using Vec = std::vector<CycloNumber>;
using Matrix = std::vector<Vec>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& a, const Vec& v);

int rank(Matrix m);
CycloNumber determinant(Matrix m);
/// x with a x = b, if one exists (any solution when not unique).
std::optional<Vec> solve(Matrix a, Vec b);
std::optional<Matrix> inverse(Matrix a);

/// Characteristic polynomial det(t I - a), constant term first, monic
/// (Faddeev-LeVerrier).
std::vector<CycloNumber> characteristic_polynomial(const Matrix& a);

}  // namespace orbistring
