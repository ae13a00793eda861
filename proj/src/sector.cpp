#include "orbistring/sector.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbistring {

// ----------------------------------------------------------- sector space

std::vector<SectorPair> sector_basis(const GSet& X)
{
    std::vector<SectorPair> out;
    for (Element g = 0; g < X.group().order(); ++g)
        for (int x : fixed_points(X, g))
            out.emplace_back(g, x);
    return out;
}

namespace {

void require_sector(const GSet& X, SectorPair a)
{
    const auto& G = X.group();
    if (!G.contains(a.first) || a.second < 0 || a.second >= X.size())
        throw SectorError("sector element out of range");
    if (X.act(a.second, a.first) != a.second)
        throw SectorError("point " + std::to_string(a.second) + " is not fixed by " +
                          G.label(a.first));
}

}  // namespace

std::optional<SectorPair> sector_product(const GSet& X, SectorPair a, SectorPair b)
{
    require_sector(X, a);
    require_sector(X, b);
    // the intersection Fix(g) and Fix(h) seen from the two constant paths
    if (a.second != b.second)
        return std::nullopt;
    return SectorPair{X.group().mul(a.first, b.first), a.second};
}

SectorPair sector_act(const GSet& X, SectorPair a, Element h)
{
    return {X.group().conj(a.first, h), X.act(a.second, h)};
}

// ------------------------------------------------------------ SectorRing

SectorRing::SectorRing(std::vector<std::string> basis, int level)
    : basis_(std::move(basis)), level_(level)
{
    const std::size_t d = basis_.size();
    c_.assign(d * d * d, CycloNumber::zero(level_));
    unit_.assign(d, CycloNumber::zero(level_));
}

Vec SectorRing::basis_vector(int i) const
{
    Vec v(dim(), CycloNumber::zero(level_));
    v[i] = CycloNumber(1, level_);
    return v;
}

Vec SectorRing::multiply(const Vec& a, const Vec& b) const
{
    const int d = dim();
    Vec out(d, CycloNumber::zero(level_));
    for (int i = 0; i < d; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j < d; ++j) {
            if (b[j].is_zero())
                continue;
            const CycloNumber ab = a[i] * b[j];
            for (int k = 0; k < d; ++k)
                if (!c(i, j, k).is_zero())
                    out[k] += ab * c(i, j, k);
        }
    }
    return out;
}

Matrix SectorRing::left_multiplication(const Vec& a) const
{
    const int d = dim();
    Matrix m = zero_matrix(d, d);
    for (int j = 0; j < d; ++j) {
        Vec col = multiply(a, basis_vector(j));
        for (int k = 0; k < d; ++k)
            m[k][j] = col[k];
    }
    return m;
}

std::optional<std::array<int, 3>> SectorRing::associativity_violation() const
{
    const int d = dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
                if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek)))
                    return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

bool SectorRing::unit_law_holds() const
{
    for (int i = 0; i < dim(); ++i) {
        Vec e = basis_vector(i);
        if (multiply(unit_, e) != e || multiply(e, unit_) != e)
            return false;
    }
    return true;
}

bool SectorRing::is_commutative() const
{
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k)
                if (c(i, j, k) != c(j, i, k))
                    return false;
    return true;
}

bool SectorRing::is_rational() const
{
    return std::all_of(c_.begin(), c_.end(), [](const CycloNumber& x) { return x.is_rational(); });
}

Matrix SectorRing::pairing_matrix() const
{
    if (!trace_)
        throw SectorError("ring has no trace");
    const int d = dim();
    Matrix m = zero_matrix(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (!c(i, j, k).is_zero())
                    m[i][j] += c(i, j, k) * (*trace_)[k];
    return m;
}

bool SectorRing::frobenius_nondegenerate() const
{
    return !determinant(pairing_matrix()).is_zero();
}

// ------------------------------------------------------ string ring of X

std::vector<std::vector<SectorPair>> sector_orbits(const GSet& X)
{
    std::vector<std::vector<SectorPair>> orbits;
    std::set<SectorPair> seen;
    for (SectorPair p : sector_basis(X)) {
        if (seen.count(p))
            continue;
        std::set<SectorPair> orbit;
        for (Element h = 0; h < X.group().order(); ++h)
            orbit.insert(sector_act(X, p, h));
        seen.insert(orbit.begin(), orbit.end());
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

SectorRing orbifold_string_ring(const GSet& X)
{
    const FiniteGroup& G = X.group();
    const auto orbits = sector_orbits(X);
    const int d = static_cast<int>(orbits.size());
    std::map<SectorPair, int> orbit_of;
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) {
        for (const auto& p : orbits[i])
            orbit_of[p] = i;
        const SectorPair& r = orbits[i].front();
        labels.push_back(G.label(r.first) + "@" + std::to_string(r.second));
    }
    SectorRing ring(labels, 1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::map<SectorPair, long> counts;
            for (const auto& a : orbits[i])
                for (const auto& b : orbits[j])
                    if (auto ab = sector_product(X, a, b))
                        ++counts[*ab];
            // the product of invariants is invariant: constant on each orbit
            for (int k = 0; k < d; ++k) {
                auto it = counts.find(orbits[k].front());
                const long n = it == counts.end() ? 0 : it->second;
                for (const auto& p : orbits[k]) {
                    auto jt = counts.find(p);
                    if ((jt == counts.end() ? 0 : jt->second) != n)
                        throw std::logic_error("sector product of invariants is not invariant");
                }
                ring.set_c(i, j, k, CycloNumber(Rational(n)));
            }
        }
    Vec unit(d, CycloNumber()), trace(d, CycloNumber());
    for (int i = 0; i < d; ++i)
        if (orbits[i].front().first == G.identity()) {
            unit[i] = CycloNumber(1);
            trace[i] = CycloNumber(make_rational(static_cast<long>(orbits[i].size()), G.order()));
        }
    ring.set_unit(std::move(unit));
    ring.set_trace(std::move(trace));
    return ring;
}

SectorRing dw_frobenius(const FiniteGroup& group)
{
    const ConjugacyData cd = conjugacy_classes(group);
    const int d = static_cast<int>(cd.reps.size());
    std::vector<std::string> labels;
    for (Element r : cd.reps)
        labels.push_back(group.label(r));
    SectorRing ring(labels, 1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<long> count(d, 0);
            for (Element a : cd.classes[i])
                for (Element b : cd.classes[j]) {
                    const Element ab = group.mul(a, b);
                    if (ab == cd.reps[cd.class_of[ab]])
                        ++count[cd.class_of[ab]];
                }
            for (int k = 0; k < d; ++k)
                ring.set_c(i, j, k, CycloNumber(Rational(count[k])));
        }
    Vec unit(d, CycloNumber()), trace(d, CycloNumber());
    unit[0] = CycloNumber(1);
    trace[0] = CycloNumber(make_rational(1, group.order()));
    ring.set_unit(std::move(unit));
    ring.set_trace(std::move(trace));
    return ring;
}

// ---------------------------------------------------------- twisted centre

std::vector<Element> alpha_regular_classes(const TwoCocycle& alpha)
{
    const TorsionCocycle tau = discrete_torsion(alpha);
    std::vector<Element> out;
    for (Element r : conjugacy_classes(alpha.group()).reps)
        if (is_alpha_regular(tau, r))
            out.push_back(r);
    return out;
}

SectorRing twisted_center(const TwoCocycle& alpha)
{
    const FiniteGroup& G = alpha.group();
    const int n = G.order();
    const int N = alpha.level();
    const TorsionCocycle tau = discrete_torsion(alpha);
    const std::vector<Element> regular = alpha_regular_classes(alpha);
    const int d = static_cast<int>(regular.size());

    // S_g as coefficient vectors on the u_x
    std::vector<Vec> S;
    for (Element g : regular) {
        Vec s(n, CycloNumber::zero(N));
        std::vector<bool> hit(n, false);
        for (Element h = 0; h < n; ++h) {
            const Element x = G.conj(g, h);
            const CycloNumber t = tau(g, h).to_cyclo(N);
            if (!hit[x]) {
                s[x] = t;
                hit[x] = true;
            } else if (s[x] != t) {
                throw std::logic_error("torsion phase depends on the coset representative");
            }
        }
        S.push_back(std::move(s));
    }
    auto twisted_mul = [&](const Vec& a, const Vec& b) {
        Vec out(n, CycloNumber::zero(N));
        for (Element x = 0; x < n; ++x) {
            if (a[x].is_zero())
                continue;
            for (Element y = 0; y < n; ++y)
                if (!b[y].is_zero())
                    out[G.mul(x, y)] += a[x] * b[y] * alpha(x, y).to_cyclo(N);
        }
        return out;
    };

    std::vector<std::string> labels;
    for (Element g : regular)
        labels.push_back(G.label(g));
    SectorRing ring(labels, N);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Vec prod = twisted_mul(S[i], S[j]);
            Vec rebuilt(n, CycloNumber::zero(N));
            for (int k = 0; k < d; ++k) {
                const CycloNumber coeff = prod[regular[k]];
                ring.set_c(i, j, k, coeff);
                for (Element x = 0; x < n; ++x)
                    if (!S[k][x].is_zero())
                        rebuilt[x] += coeff * S[k][x];
            }
            if (rebuilt != prod)
                throw std::logic_error("product of central elements left the centre");
        }
    Vec unit(d, CycloNumber::zero(N)), trace(d, CycloNumber::zero(N));
    unit[0] = CycloNumber(1, N);  // regular[0] is the identity
    trace[0] = CycloNumber(make_rational(1, n), N);
    ring.set_unit(std::move(unit));
    ring.set_trace(std::move(trace));
    return ring;
}

// ------------------------------------------------------------- isomorphism

bool is_algebra_isomorphism(const SectorRing& a, const SectorRing& b, const Matrix& images)
{
    const int d = a.dim();
    if (b.dim() != d || static_cast<int>(images.size()) != d)
        return false;
    if (rank(images) != d)
        return false;
    auto image_of = [&](const Vec& v) {
        Vec out(d, CycloNumber());
        for (int i = 0; i < d; ++i)
            if (!v[i].is_zero())
                for (int k = 0; k < d; ++k)
                    out[k] += v[i] * images[i][k];
        return out;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (image_of(a.multiply(a.basis_vector(i), a.basis_vector(j))) !=
                b.multiply(images[i], images[j]))
                return false;
    return image_of(a.unit()) == b.unit();
}

std::string to_string(MoritaReport::Verdict v)
{
    switch (v) {
    case MoritaReport::Verdict::isomorphic:
        return "isomorphic";
    case MoritaReport::Verdict::not_isomorphic:
        return "not isomorphic";
    case MoritaReport::Verdict::inconclusive:
        break;
    }
    return "inconclusive";
}

namespace {

int center_dimension(const SectorRing& r)
{
    // x in the centre iff sum_i x_i (c(j,i,k) - c(i,j,k)) = 0 for all j,k
    const int d = r.dim();
    Matrix m;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            Vec row(d, CycloNumber());
            for (int i = 0; i < d; ++i)
                row[i] = r.c(j, i, k) - r.c(i, j, k);
            m.push_back(std::move(row));
        }
    return d - (m.empty() ? 0 : rank(m));
}

int trace_form_rank(const SectorRing& r)
{
    const int d = r.dim();
    std::vector<Matrix> L;
    for (int i = 0; i < d; ++i)
        L.push_back(r.left_multiplication(r.basis_vector(i)));
    Matrix form = zero_matrix(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Matrix p = mat_mul(L[i], L[j]);
            for (int k = 0; k < d; ++k)
                form[i][j] += p[k][k];
        }
    return rank(form);
}

// Basis-to-basis isomorphism search; charpolys of left multiplication prune.
std::optional<std::vector<int>> permutation_search(const SectorRing& a, const SectorRing& b)
{
    const int d = a.dim();
    std::vector<std::vector<CycloNumber>> pa, pb;
    for (int i = 0; i < d; ++i) {
        pa.push_back(characteristic_polynomial(a.left_multiplication(a.basis_vector(i))));
        pb.push_back(characteristic_polynomial(b.left_multiplication(b.basis_vector(i))));
    }
    std::vector<int> sigma(d, -1);
    std::vector<bool> used(d, false);
    std::function<bool(int)> extend = [&](int t) -> bool {
        if (t == d) {
            Matrix images = zero_matrix(d, d);
            for (int i = 0; i < d; ++i)
                images[i][sigma[i]] = CycloNumber(1);
            return is_algebra_isomorphism(a, b, images);
        }
        for (int s = 0; s < d; ++s) {
            if (used[s] || pa[t] != pb[s] || (a.unit()[t] != b.unit()[s]))
                continue;
            sigma[t] = s;
            bool ok = true;
            for (int i = 0; i <= t && ok; ++i)
                for (int j = 0; j <= t && ok; ++j)
                    for (int k = 0; k <= t && ok; ++k)
                        if ((i == t || j == t || k == t) &&
                            a.c(i, j, k) != b.c(sigma[i], sigma[j], sigma[k]))
                            ok = false;
            if (ok) {
                used[s] = true;
                if (extend(t + 1))
                    return true;
                used[s] = false;
            }
        }
        sigma[t] = -1;
        return false;
    };
    if (extend(0))
        return sigma;
    return std::nullopt;
}

std::vector<Integer> divisors(Integer n)
{
    if (n < 0)
        n = -n;
    std::vector<Integer> out;
    for (Integer k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            out.push_back(k);
            if (k * k != n)
                out.push_back(n / k);
        }
    return out;
}

// Rational roots with multiplicity of a rational polynomial (constant first).
std::vector<Rational> rational_roots(std::vector<Rational> p)
{
    std::vector<Rational> roots;
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    while (p.size() > 1 && p.front() == 0) {
        roots.push_back(0);
        p.erase(p.begin());
    }
    if (p.size() <= 1)
        return roots;
    Integer den = 1;
    for (const auto& c : p)
        den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> q;
    for (const auto& c : p)
        q.push_back(Integer(c * Rational(den)));
    const auto num_div = divisors(q.front());
    const auto den_div = divisors(q.back());
    auto eval = [](const std::vector<Rational>& poly, const Rational& x) {
        Rational v = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it)
            v = v * x + *it;
        return v;
    };
    std::vector<Rational> cur = p;
    bool found = true;
    while (found && cur.size() > 1) {
        found = false;
        for (const auto& nd : num_div) {
            for (const auto& dd : den_div) {
                for (int sign : {1, -1}) {
                    Rational x = make_rational(Integer(sign * nd), dd);
                    if (eval(cur, x) == 0) {
                        roots.push_back(x);
                        // synthetic division by (t - x)
                        std::vector<Rational> next(cur.size() - 1);
                        Rational carry = 0;
                        for (std::size_t i = cur.size(); i-- > 1;) {
                            carry = cur[i] + carry * x;
                            next[i - 1] = carry;
                        }
                        cur = std::move(next);
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
            if (found)
                break;
        }
    }
    return roots;
}

std::vector<Rational> rational_coeffs(const std::vector<CycloNumber>& p)
{
    std::vector<Rational> out;
    for (const auto& c : p)
        out.push_back(c.to_rational());
    return out;
}

// Primitive idempotents of a commutative rational algebra isomorphic to Q^d,
// or nothing if the algebra does not split.
struct SplitResult {
    bool split = false;
    std::vector<Vec> idempotents;
};

SplitResult rational_split(const SectorRing& r)
{
    const int d = r.dim();
    SplitResult res;
    for (int i = 0; i < d; ++i) {
        auto roots = rational_roots(rational_coeffs(
            characteristic_polynomial(r.left_multiplication(r.basis_vector(i)))));
        if (static_cast<int>(roots.size()) < d)
            return res;  // some basis operator has an irrational eigenvalue
    }
    if (trace_form_rank(r) < d)
        return res;  // nilpotents present
    res.split = true;
    // a generic element separates the d characters
    for (int attempt = 1; attempt <= 64; ++attempt) {
        Vec x(d, CycloNumber());
        for (int i = 0; i < d; ++i)
            x[i] = CycloNumber(Rational(static_cast<long>(1 + (attempt * (i + 1) * (i + 2)) % 97)));
        auto roots = rational_roots(rational_coeffs(characteristic_polynomial(r.left_multiplication(x))));
        std::set<Rational> distinct(roots.begin(), roots.end());
        if (static_cast<int>(distinct.size()) < d)
            continue;
        for (const auto& lam : distinct) {
            Vec e = r.unit();
            CycloNumber scale(1);
            for (const auto& mu : distinct) {
                if (mu == lam)
                    continue;
                Vec shifted = x;
                for (int k = 0; k < d; ++k)
                    shifted[k] -= CycloNumber(mu) * r.unit()[k];
                e = r.multiply(e, shifted);
                scale *= CycloNumber(Rational(lam - mu));
            }
            for (auto& c : e)
                c /= scale;
            res.idempotents.push_back(std::move(e));
        }
        return res;
    }
    res.idempotents.clear();
    return res;
}

}  // namespace

MoritaReport compare_rings(const SectorRing& a, const SectorRing& b)
{
    using V = MoritaReport::Verdict;
    MoritaReport rep;
    rep.ring_x = a;
    rep.ring_y = b;
    rep.dim_x = a.dim();
    rep.dim_y = b.dim();
    if (a.dim() != b.dim()) {
        rep.verdict = V::not_isomorphic;
        rep.method = "dimension";
        rep.reason = "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ";
        return rep;
    }
    if (a.is_commutative() != b.is_commutative()) {
        rep.verdict = V::not_isomorphic;
        rep.method = "commutativity";
        rep.reason = "exactly one ring is commutative";
        return rep;
    }
    const int za = center_dimension(a), zb = center_dimension(b);
    if (za != zb) {
        rep.verdict = V::not_isomorphic;
        rep.method = "centre";
        rep.reason = "centre dimensions " + std::to_string(za) + " and " + std::to_string(zb) + " differ";
        return rep;
    }
    const int ta = trace_form_rank(a), tb = trace_form_rank(b);
    if (ta != tb) {
        rep.verdict = V::not_isomorphic;
        rep.method = "trace form";
        rep.reason = "trace form ranks " + std::to_string(ta) + " and " + std::to_string(tb) + " differ";
        return rep;
    }
    if (auto sigma = permutation_search(a, b)) {
        Matrix images = zero_matrix(a.dim(), b.dim());
        for (int i = 0; i < a.dim(); ++i)
            images[i][(*sigma)[i]] = CycloNumber(1);
        rep.verdict = V::isomorphic;
        rep.method = "basis permutation";
        rep.witness = std::move(images);
        return rep;
    }
    if (a.is_commutative() && a.is_rational() && b.is_rational() && a.level() == 1 && b.level() == 1) {
        SplitResult sa = rational_split(a), sb = rational_split(b);
        if (sa.split != sb.split) {
            rep.verdict = V::not_isomorphic;
            rep.method = "spectrum";
            rep.reason = "exactly one ring splits into copies of Q";
            return rep;
        }
        const int d = a.dim();
        if (sa.split && static_cast<int>(sa.idempotents.size()) == d &&
            static_cast<int>(sb.idempotents.size()) == d) {
            // e_j = sum_l a_jl E_l  ->  sum_l a_jl F_l
            Matrix E = zero_matrix(d, d);
            for (int l = 0; l < d; ++l)
                for (int k = 0; k < d; ++k)
                    E[k][l] = sa.idempotents[l][k];
            Matrix images;
            bool ok = true;
            for (int j = 0; j < d && ok; ++j) {
                auto coords = solve(E, a.basis_vector(j));
                if (!coords) {
                    ok = false;
                    break;
                }
                Vec img(d, CycloNumber());
                for (int l = 0; l < d; ++l)
                    for (int k = 0; k < d; ++k)
                        img[k] += (*coords)[l] * sb.idempotents[l][k];
                images.push_back(std::move(img));
            }
            if (ok && is_algebra_isomorphism(a, b, images)) {
                rep.verdict = V::isomorphic;
                rep.method = "idempotent split";
                rep.witness = std::move(images);
                return rep;
            }
        }
    }
    rep.verdict = V::inconclusive;
    rep.method = "none";
    rep.reason = "invariants agree but no isomorphism was found";
    return rep;
}

MoritaReport morita_compare(const GSet& X, const GSet& Y)
{
    return compare_rings(orbifold_string_ring(X), orbifold_string_ring(Y));
}

}  // namespace orbistring
