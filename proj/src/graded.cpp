#include "orbistring/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orbistring {

namespace {

bool divides(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::string name, std::vector<Generator> gens, std::vector<Monomial> annihilators)
    : name_(std::move(name)), gens_(std::move(gens)), zero_(std::move(annihilators))
{
    std::set<std::string> names;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.name.empty() || !names.insert(g.name).second)
            throw GradedError("generator names must be distinct and nonempty");
        if (g.root_order < 0)
            throw GradedError("root order of " + g.name + " is negative");
        if (g.root_order > 0 && g.degree != 0)
            throw GradedError(g.name + "^" + std::to_string(g.root_order) + " = 1 needs degree 0");
    }
    for (const auto& z : zero_) {
        if (z.size() != gens_.size())
            throw GradedError("annihilator has the wrong number of exponents");
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i] < 0)
                throw GradedError("negative exponent in an annihilator");
            // an invertible generator in a vanishing monomial would kill everything
            if (z[i] > 0 && gens_[i].root_order > 0)
                throw GradedError("annihilator involves the invertible generator " + gens_[i].name);
        }
        if (std::all_of(z.begin(), z.end(), [](int e) { return e == 0; }))
            throw GradedError("the unit cannot vanish");
    }
}

int GradedAlgebra::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * gens_[i].degree;
    return d;
}

std::optional<Monomial> GradedAlgebra::normal_form(Monomial m) const
{
    if (m.size() != gens_.size())
        throw GradedError("monomial has the wrong number of exponents");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0)
            throw GradedError("negative exponent");
        if (is_odd(static_cast<int>(i)) && m[i] > 1)
            return std::nullopt;
        if (gens_[i].root_order > 0)
            m[i] %= gens_[i].root_order;
    }
    for (const auto& z : zero_)
        if (divides(z, m))
            return std::nullopt;
    return m;
}

Poly GradedAlgebra::one() const { return monomial(Monomial(gens_.size(), 0)); }

Poly GradedAlgebra::generator(int gen) const
{
    Monomial m(gens_.size(), 0);
    m.at(gen) = 1;
    return monomial(m);
}

Poly GradedAlgebra::generator(const std::string& name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return generator(static_cast<int>(i));
    throw GradedError("unknown generator " + name);
}

Poly GradedAlgebra::monomial(const Monomial& m, const Rational& c) const
{
    Poly out;
    if (c == 0)
        return out;
    if (auto nf = normal_form(m))
        out[*nf] = c;
    return out;
}

Poly GradedAlgebra::multiply_monomials(const Monomial& a, const Monomial& b) const
{
    // moving each odd generator of b left past the odd generators of a with
    // larger index
    int swaps = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (!is_odd(static_cast<int>(j)) || b[j] == 0)
            continue;
        for (std::size_t i = j + 1; i < a.size(); ++i)
            if (is_odd(static_cast<int>(i)))
                swaps += a[i] * b[j];
    }
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = a[i] + b[i];
    return monomial(m, swaps % 2 ? Rational(-1) : Rational(1));
}

Poly GradedAlgebra::multiply(const Poly& a, const Poly& b) const
{
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            for (const auto& [m, c] : multiply_monomials(ma, mb)) {
                Rational& slot = out[m];
                slot += c * ca * cb;
                if (slot == 0)
                    out.erase(m);
            }
    return out;
}

Poly GradedAlgebra::power(const Poly& a, int k) const
{
    if (k < 0)
        throw GradedError("negative power");
    Poly out = one();
    for (int i = 0; i < k; ++i)
        out = multiply(out, a);
    return out;
}

std::vector<Monomial> GradedAlgebra::basis(int lo, int hi) const
{
    const int k = size();
    // exponent bounds: odd, root of unity, or a pure power that vanishes
    std::vector<int> bound(k, -1);
    for (int i = 0; i < k; ++i) {
        if (is_odd(i))
            bound[i] = 1;
        else if (gens_[i].root_order > 0)
            bound[i] = gens_[i].root_order - 1;
        for (const auto& z : zero_) {
            int others = 0;
            for (int j = 0; j < k; ++j)
                others += j != i ? z[j] : 0;
            if (others == 0 && z[i] > 0)
                bound[i] = bound[i] < 0 ? z[i] - 1 : std::min(bound[i], z[i] - 1);
        }
    }
    int min_bounded = 0, max_bounded = 0;
    bool up = false, down = false;
    for (int i = 0; i < k; ++i) {
        const int d = gens_[i].degree;
        if (bound[i] >= 0) {
            min_bounded += std::min(0, d * bound[i]);
            max_bounded += std::max(0, d * bound[i]);
        } else if (d == 0) {
            throw GradedError("degree window holds infinitely many monomials (" + gens_[i].name + " has degree 0)");
        } else {
            (d > 0 ? up : down) = true;
        }
    }
    if (up && down)
        throw GradedError("degree window holds infinitely many monomials (unbounded generators of both signs)");
    for (int i = 0; i < k; ++i)
        if (bound[i] < 0) {
            const int d = gens_[i].degree;
            bound[i] = d > 0 ? std::max(0, (hi - min_bounded) / d) : std::max(0, (max_bounded - lo) / -d);
        }

    std::vector<Monomial> out;
    Monomial m(k, 0);
    while (true) {
        const int d = degree(m);
        if (d >= lo && d <= hi)
            if (auto nf = normal_form(m); nf && *nf == m)
                out.push_back(m);
        int i = 0;
        for (; i < k; ++i) {
            if (++m[i] <= bound[i])
                break;
            m[i] = 0;
        }
        if (i == k)
            break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        const int da = degree(a), db = degree(b);
        return da != db ? da < db : a < b;
    });
    return out;
}

std::string GradedAlgebra::to_string(const Monomial& m) const
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += gens_[i].name;
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string GradedAlgebra::to_string(const Poly& p) const
{
    if (p.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : p) {
        const std::string mono = to_string(m);
        Rational mag = abs(c);
        std::string term = mag == 1 ? mono : mag.get_str() + (mono == "1" ? "" : "*" + mono);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

Monomial GradedAlgebra::parse_monomial(const std::string& text) const
{
    Monomial m(gens_.size(), 0);
    if (text == "1")
        return m;
    std::stringstream ss(text);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        std::string name = factor;
        int e = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            try {
                e = std::stoi(factor.substr(caret + 1));
            } catch (const std::exception&) {
                throw GradedError("bad exponent in " + factor);
            }
            if (e < 0)
                throw GradedError("bad exponent in " + factor);
        }
        bool found = false;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) {
                m[i] += e;
                found = true;
            }
        if (!found)
            throw GradedError("unknown generator " + name + " in " + text);
    }
    return m;
}

Poly add(const Poly& a, const Poly& b)
{
    Poly out = a;
    for (const auto& [m, c] : b) {
        Rational& slot = out[m];
        slot += c;
        if (slot == 0)
            out.erase(m);
    }
    return out;
}

Poly scale(const Poly& a, const Rational& c)
{
    Poly out;
    if (c == 0)
        return out;
    for (const auto& [m, x] : a)
        out[m] = x * c;
    return out;
}

bool is_zero(const Poly& a) { return a.empty(); }

GradedAlgebra lens_ring(int n, int p)
{
    if (n < 1 || n % 2 == 0)
        throw GradedError("lens ring needs odd n >= 1, got " + std::to_string(n));
    if (p < 1)
        throw GradedError("lens ring needs p >= 1");
    return GradedAlgebra("L(" + std::to_string(n) + "," + std::to_string(p) + ")",
                         {{"a", -n, 0}, {"u", n - 1, 0}, {"v", 0, p}});
}

GradedAlgebra sphere_quotient_ring(int p)
{
    if (p < 1)
        throw GradedError("sphere quotient ring needs p >= 1");
    // generator order b, a, v, y
    return GradedAlgebra("[S2/Z" + std::to_string(p) + "]",
                         {{"b", 1, 0}, {"a", -2, 0}, {"v", 2, 0}, {"y", 0, p}},
                         {{0, 2, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}});
}

}  // namespace orbistring
