#include "orbistring/linalg.hpp"

#include <stdexcept>

namespace orbistring {

Matrix zero_matrix(std::size_t rows, std::size_t cols)
{
    return Matrix(rows, Vec(cols, CycloNumber()));
}

Matrix identity_matrix(std::size_t n)
{
    Matrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = CycloNumber(1);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.empty())
        return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    Matrix out = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!b[k][j].is_zero())
                    out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Vec mat_vec(const Matrix& a, const Vec& v)
{
    Vec out(a.size(), CycloNumber());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero())
                out[i] += a[i][j] * v[j];
    return out;
}

namespace {

// Row-reduces in place; returns pivot columns. `det` picks up the sign and
// pivots when requested.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols, CycloNumber* det)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero())
            ++p;
        if (p == m.size()) {
            if (det)
                *det = CycloNumber();
            continue;
        }
        if (p != row) {
            std::swap(m[p], m[row]);
            if (det)
                *det = -*det;
        }
        const CycloNumber piv = m[row][col];
        if (det)
            *det *= piv;
        const CycloNumber inv = piv.inverse();
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            const CycloNumber f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c)
                if (!m[row][c].is_zero())
                    m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m)
{
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    return static_cast<int>(row_reduce(m, cols, nullptr).size());
}

CycloNumber determinant(Matrix m)
{
    if (m.size() != (m.empty() ? 0 : m[0].size()))
        throw std::invalid_argument("determinant of a non-square matrix");
    CycloNumber det(1);
    auto piv = row_reduce(m, m.size(), &det);
    if (piv.size() < m.size())
        return CycloNumber();
    return det;
}

std::optional<Vec> solve(Matrix a, Vec b)
{
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i].push_back(b[i]);
    auto piv = row_reduce(a, cols, nullptr);
    for (std::size_t r = piv.size(); r < a.size(); ++r)
        if (!a[r][cols].is_zero())
            return std::nullopt;
    Vec x(cols, CycloNumber());
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = a[r][cols];
    return x;
}

std::optional<Matrix> inverse(Matrix a)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw std::invalid_argument("inverse of a non-square matrix");
        a[i].resize(2 * n, CycloNumber());
        a[i][n + i] = CycloNumber(1);
    }
    auto piv = row_reduce(a, n, nullptr);
    if (piv.size() < n)
        return std::nullopt;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i].assign(a[i].begin() + n, a[i].end());
    return out;
}

std::vector<CycloNumber> characteristic_polynomial(const Matrix& a)
{
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    const std::size_t n = a.size();
    std::vector<CycloNumber> c(n + 1, CycloNumber());
    c[n] = CycloNumber(1);
    Matrix m = zero_matrix(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = mat_mul(a, m);
        for (std::size_t i = 0; i < n; ++i)
            m[i][i] += c[n - k + 1];
        Matrix am = mat_mul(a, m);
        CycloNumber tr;
        for (std::size_t i = 0; i < n; ++i)
            tr += am[i][i];
        c[n - k] = -tr / CycloNumber(Rational(static_cast<long>(k)));
    }
    return c;
}

}  // namespace orbistring
