#include "orbistring/bv.hpp"

namespace orbistring {

namespace {

Vector zeros(int n) { return Vector(n, Rational(0)); }

bool all_zero(const Vector& v)
{
    for (const auto& c : v)
        if (c != 0)
            return false;
    return true;
}

Vector plus(Vector a, const Vector& b, const Rational& s = 1)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += s * b[i];
    return a;
}

int sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

int TruncatedAlgebra::index(const std::string& name) const
{
    for (int i = 0; i < dim(); ++i)
        if (names[i] == name)
            return i;
    return -1;
}

Vector TruncatedAlgebra::basis_vector(int i) const
{
    Vector v = zeros(dim());
    v.at(i) = 1;
    return v;
}

std::optional<Vector> TruncatedAlgebra::multiply(const Vector& x, const Vector& y) const
{
    Vector out = zeros(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j] == 0)
                continue;
            const auto& p = product[i][j];
            if (!p)
                return std::nullopt;
            out = plus(out, *p, x[i] * y[j]);
        }
    }
    return out;
}

std::string TruncatedAlgebra::to_string(const Vector& v) const
{
    std::string out;
    for (int i = 0; i < dim(); ++i) {
        const Rational& c = v[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        std::string term = mag == 1 ? names[i] : mag.get_str() + (names[i] == "1" ? "" : "*" + names[i]);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

TruncatedAlgebra truncate(const GradedAlgebra& A, int lo, int hi)
{
    if (lo > hi)
        throw GradedError("empty degree window");
    TruncatedAlgebra T;
    T.name = A.name();
    T.lo = lo;
    T.hi = hi;
    const auto basis = A.basis(lo, hi);
    std::map<Monomial, int> where;
    for (const auto& m : basis) {
        where[m] = T.dim();
        T.names.push_back(A.to_string(m));
        T.degree.push_back(A.degree(m));
    }
    const int n = T.dim();
    T.product.assign(n, std::vector<std::optional<Vector>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int d = T.degree[i] + T.degree[j];
            if (d < lo || d > hi)
                continue;
            Vector v = zeros(n);
            for (const auto& [m, c] : A.multiply_monomials(basis[i], basis[j]))
                v[where.at(m)] = c;
            T.product[i][j] = v;
        }
    return T;
}

TruncatedAlgebra truncate(const SectorRing& R)
{
    if (!R.is_rational())
        throw GradedError("the BV checker works over Q; this ring has cyclotomic structure constants");
    TruncatedAlgebra T;
    T.name = "sector ring";
    T.names = R.basis();
    T.degree.assign(R.dim(), 0);
    // degree 1 is part of the window and empty, so delta is known to vanish
    T.lo = 0;
    T.hi = 1;
    const int n = R.dim();
    T.product.assign(n, std::vector<std::optional<Vector>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vector v = zeros(n);
            for (int k = 0; k < n; ++k)
                v[k] = R.c(i, j, k).to_rational();
            T.product[i][j] = v;
        }
    return T;
}

BVData zero_delta(TruncatedAlgebra A)
{
    const int n = A.dim();
    return BVData{std::move(A), std::vector<Vector>(n, zeros(n))};
}

std::optional<Vector> apply_delta(const BVData& D, const Vector& x)
{
    const auto& A = D.algebra;
    Vector out = zeros(A.dim());
    for (int i = 0; i < A.dim(); ++i) {
        if (x[i] == 0)
            continue;
        if (A.degree[i] + 1 > A.hi)
            return std::nullopt;
        out = plus(out, D.delta[i], x[i]);
    }
    return out;
}

std::optional<Vector> bracket(const BVData& D, const Vector& x, int dx, const Vector& y, int dy)
{
    (void)dy;
    const auto& A = D.algebra;
    auto xy = A.multiply(x, y);
    auto dx_ = apply_delta(D, x);
    auto dy_ = apply_delta(D, y);
    if (!xy || !dx_ || !dy_)
        return std::nullopt;
    auto t1 = apply_delta(D, *xy);
    auto t2 = A.multiply(*dx_, y);
    auto t3 = A.multiply(x, *dy_);
    if (!t1 || !t2 || !t3)
        return std::nullopt;
    const int s = sign(dx);
    return plus(plus(plus(zeros(A.dim()), *t1, s), *t2, -s), *t3, -1);
}

BVReport bv_check(const BVData& D)
{
    const auto& A = D.algebra;
    const int n = A.dim();
    BVReport rep;
    auto fail = [&](std::string axiom, std::string witness) {
        rep.pass = false;
        rep.axiom = std::move(axiom);
        rep.witness = std::move(witness);
        return rep;
    };
    if (static_cast<int>(D.delta.size()) != n)
        throw GradedError("delta needs one image per basis element");
    for (const auto& v : D.delta)
        if (static_cast<int>(v.size()) != n)
            throw GradedError("delta image has the wrong length");
    const auto& e = A.names;
    auto E = [&](int i) { return A.basis_vector(i); };

    for (int i = 0; i < n; ++i) {
        if (A.degree[i] + 1 > A.hi)
            continue;
        for (int j = 0; j < n; ++j)
            if (D.delta[i][j] != 0 && A.degree[j] != A.degree[i] + 1)
                return fail("degree", "delta(" + e[i] + ") = " + A.to_string(D.delta[i]) + " has a term of degree " +
                                          std::to_string(A.degree[j]) + ", expected " +
                                          std::to_string(A.degree[i] + 1));
    }
    for (int i = 0; i < n; ++i) {
        auto d1 = apply_delta(D, E(i));
        auto d2 = d1 ? apply_delta(D, *d1) : std::nullopt;
        if (!d2) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (!all_zero(*d2))
            return fail("delta squared", "delta(delta(" + e[i] + ")) = " + A.to_string(*d2));
    }
    const auto& deg = A.degree;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto a = bracket(D, E(i), deg[i], E(j), deg[j]);
            auto b = bracket(D, E(j), deg[j], E(i), deg[i]);
            if (!a || !b) {
                ++rep.skipped;
                continue;
            }
            ++rep.checked;
            auto sum = plus(*a, *b, sign(static_cast<long>(deg[i] + 1) * (deg[j] + 1)));
            if (!all_zero(sum))
                return fail("antisymmetry", "{" + e[i] + "," + e[j] + "} = " + A.to_string(*a) + ", {" + e[j] + "," +
                                                e[i] + "} = " + A.to_string(*b));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const int di = deg[i], dj = deg[j], dk = deg[k];
                // Jacobi
                auto bjk = bracket(D, E(j), dj, E(k), dk);
                auto bij = bracket(D, E(i), di, E(j), dj);
                auto bik = bracket(D, E(i), di, E(k), dk);
                std::optional<Vector> lhs, r1, r2;
                if (bjk && bij && bik) {
                    lhs = bracket(D, E(i), di, *bjk, dj + dk + 1);
                    r1 = bracket(D, *bij, di + dj + 1, E(k), dk);
                    r2 = bracket(D, E(j), dj, *bik, di + dk + 1);
                }
                if (lhs && r1 && r2) {
                    ++rep.checked;
                    auto rhs = plus(*r1, *r2, sign(static_cast<long>(di + 1) * (dj + 1)));
                    if (!all_zero(plus(*lhs, rhs, -1)))
                        return fail("Jacobi", "at (" + e[i] + ", " + e[j] + ", " + e[k] + "): lhs " +
                                                  A.to_string(*lhs) + ", rhs " + A.to_string(rhs));
                } else {
                    ++rep.skipped;
                }
                // derivation in the second slot
                auto yz = A.multiply(E(j), E(k));
                std::optional<Vector> l2, s1, s2;
                if (yz && bij && bik) {
                    l2 = bracket(D, E(i), di, *yz, dj + dk);
                    s1 = A.multiply(*bij, E(k));
                    s2 = A.multiply(E(j), *bik);
                }
                if (l2 && s1 && s2) {
                    ++rep.checked;
                    auto rhs = plus(*s1, *s2, sign(static_cast<long>(di + 1) * dj));
                    if (!all_zero(plus(*l2, rhs, -1)))
                        return fail("Leibniz", "at (" + e[i] + ", " + e[j] + ", " + e[k] + "): lhs " +
                                                   A.to_string(*l2) + ", rhs " + A.to_string(rhs));
                } else {
                    ++rep.skipped;
                }
            }
    return rep;
}

}  // namespace orbistring
