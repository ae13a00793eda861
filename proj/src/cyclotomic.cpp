#include "orbistring/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace orbistring {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m (degree d).
void reduce_monic(Poly& p, const std::vector<Integer>& m)
{
    const std::size_t d = m.size() - 1;
    trim(p);
    while (p.size() > d) {
        const std::size_t shift = p.size() - 1 - d;
        const Rational lead = p.back();
        for (std::size_t i = 0; i <= d; ++i)
            p[shift + i] -= lead * Rational(m[i]);
        trim(p);
    }
}

std::vector<Integer> exact_div(std::vector<Integer> num, const std::vector<Integer>& den)
{
    // den monic
    const std::size_t dd = den.size() - 1;
    std::vector<Integer> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        Integer c = num[k];
        q[k - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i)
            num[k - dd + i] -= c * den[i];
    }
    return q;
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// Polynomial division over Q: a = q*b + r.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r)
{
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Rational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        trim(a);
    }
    r = std::move(a);
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    trim(out);
    return out;
}

}  // namespace

int euler_phi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<Integer>> cache;
    if (n < 1)
        throw std::invalid_argument("cyclotomic level must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<Integer> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            num = exact_div(num, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(num)).first->second;
}

int lcm_level(int a, int b) { return std::lcm(a, b); }

CycloNumber::CycloNumber(const Rational& value, int level) : level_(level)
{
    if (level < 1)
        throw std::invalid_argument("cyclotomic level must be positive");
    coeffs_.assign(euler_phi(level), Rational(0));
    coeffs_[0] = value;
}

CycloNumber CycloNumber::from_polynomial(int level, std::vector<Rational> coeffs)
{
    CycloNumber out = zero(level);
    reduce_monic(coeffs, cyclotomic_polynomial(level));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.coeffs_[i] = coeffs[i];
    return out;
}

CycloNumber CycloNumber::zeta_power(int level, long a)
{
    long e = a % level;
    if (e < 0)
        e += level;
    std::vector<Rational> p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[e] = 1;
    return from_polynomial(level, std::move(p));
}

bool CycloNumber::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycloNumber::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rational CycloNumber::to_rational() const
{
    if (!is_rational())
        throw std::domain_error("cyclotomic number is not rational: " + to_string());
    return coeffs_[0];
}

CycloNumber CycloNumber::embed(int new_level) const
{
    if (new_level == level_)
        return *this;
    if (new_level % level_ != 0)
        throw std::invalid_argument("embedding level must be a multiple of the current level");
    const int step = new_level / level_;
    std::vector<Rational> p(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p[i * step] = coeffs_[i];
    return from_polynomial(new_level, std::move(p));
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o)
{
    if (o.level_ != level_) {
        const int l = std::lcm(level_, o.level_);
        *this = embed(l);
        return *this += o.embed(l);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o)
{
    return *this += -o;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o)
{
    if (o.level_ != level_) {
        const int l = std::lcm(level_, o.level_);
        *this = embed(l);
        return *this *= o.embed(l);
    }
    if (level_ <= 2) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    *this = from_polynomial(level_, poly_mul(coeffs_, o.coeffs_));
    return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o)
{
    return *this *= o.inverse();
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CycloNumber CycloNumber::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero in cyclotomic field");
    if (is_rational())
        return CycloNumber(1 / coeffs_[0], level_);
    // extended Euclid: find s with s*a = 1 mod Phi
    const auto& phi = cyclotomic_polynomial(level_);
    Poly m(phi.begin(), phi.end());
    Poly a = coeffs_;
    trim(a);
    Poly r0 = m, r1 = a, s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant (gcd); a * s0 = r0 mod m
    const Rational g = r0.at(0);
    for (auto& c : s0)
        c /= g;
    return from_polynomial(level_, std::move(s0));
}

bool operator==(const CycloNumber& a, const CycloNumber& b)
{
    if (a.level_ == b.level_)
        return a.coeffs_ == b.coeffs_;
    const int l = std::lcm(a.level_, b.level_);
    return a.embed(l).coeffs_ == b.embed(l).coeffs_;
}

std::string CycloNumber::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        std::string term;
        if (i == 0)
            term = mag.get_str();
        else {
            term = (mag == 1) ? "" : mag.get_str() + "*";
            term += (i == 1) ? "z" : "z^" + std::to_string(i);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace orbistring
