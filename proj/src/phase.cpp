#include "orbistring/phase.hpp"

#include <numeric>
#include <stdexcept>

namespace orbistring {

CycloNumber Phase::to_cyclo() const { return to_cyclo(level()); }

CycloNumber Phase::to_cyclo(int lvl) const
{
    if (lvl % level() != 0)
        throw std::invalid_argument("phase " + to_string() + " does not live at level " +
                                    std::to_string(lvl));
    Rational a = q_ * lvl;
    return CycloNumber::zeta_power(lvl, a.get_num().get_si());
}

namespace {

void check_size(const FiniteGroup& group, const PhaseTable& table)
{
    const auto n = static_cast<std::size_t>(group.order());
    if (table.size() != n)
        throw std::invalid_argument("cocycle table has " + std::to_string(table.size()) +
                                    " rows, group order is " + std::to_string(n));
    for (const auto& row : table)
        if (row.size() != n)
            throw std::invalid_argument("cocycle table row has wrong length");
}

int table_level(const PhaseTable& t)
{
    int l = 1;
    for (const auto& row : t)
        for (const auto& p : row)
            l = std::lcm(l, p.level());
    return l;
}

}  // namespace

CocycleReport is_two_cocycle(const FiniteGroup& group, const PhaseTable& a)
{
    check_size(group, a);
    const int n = group.order();
    CocycleReport r;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (a[g][h] * a[group.mul(g, h)][k] != a[g][group.mul(h, k)] * a[h][k]) {
                    r.valid = false;
                    r.reason = "cocycle identity fails at (" + group.label(g) + ", " +
                               group.label(h) + ", " + group.label(k) + ")";
                    r.witness = std::array<Element, 3>{g, h, k};
                    return r;
                }
    for (int g = 0; g < n; ++g) {
        if (!a[0][g].is_one() || !a[g][0].is_one()) {
            r.valid = false;
            r.reason = "not normalized at " + group.label(g);
            r.witness = a[0][g].is_one() ? std::array<Element, 3>{g, 0, 0}
                                         : std::array<Element, 3>{0, g, 0};
            return r;
        }
    }
    return r;
}

TwoCocycle::TwoCocycle(FiniteGroup group) : group_(std::move(group))
{
    table_.assign(group_.order(), std::vector<Phase>(group_.order()));
}

TwoCocycle TwoCocycle::from_table(FiniteGroup group, PhaseTable table)
{
    check_size(group, table);
    const Phase ee = table[0][0];
    if (!ee.is_one())
        for (auto& row : table)
            for (auto& p : row)
                p = p / ee;
    CocycleReport r = is_two_cocycle(group, table);
    if (!r.valid)
        throw CocycleError(r.reason);
    return TwoCocycle(std::move(group), std::move(table));
}

int TwoCocycle::level() const { return table_level(table_); }

TwoCocycle operator*(const TwoCocycle& a, const TwoCocycle& b)
{
    if (!(a.group_ == b.group_))
        throw std::invalid_argument("cocycles live on different groups");
    PhaseTable t = a.table_;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            t[i][j] *= b.table_[i][j];
    return TwoCocycle(a.group_, std::move(t));
}

TwoCocycle coboundary(const FiniteGroup& group, const std::vector<Phase>& beta)
{
    if (beta.size() != static_cast<std::size_t>(group.order()))
        throw std::invalid_argument("beta has wrong length");
    if (!beta[0].is_one())
        throw std::invalid_argument("beta(e) must be 1");
    const int n = group.order();
    PhaseTable t(n, std::vector<Phase>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            t[g][h] = beta[g] * beta[h] / beta[group.mul(g, h)];
    return TwoCocycle::from_table(group, std::move(t));
}

TorsionCocycle discrete_torsion(const TwoCocycle& alpha)
{
    const FiniteGroup& G = alpha.group();
    const int n = G.order();
    TorsionCocycle out;
    out.group_ = G;
    out.tau_.assign(n, std::vector<Phase>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            out.tau_[g][h] = alpha(g, h) / alpha(h, G.conj(g, h));
    return out;
}

int TorsionCocycle::level() const { return table_level(tau_); }

std::optional<std::array<Element, 3>> TorsionCocycle::groupoid_law_violation() const
{
    const int n = group_.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (tau_[g][group_.mul(h, k)] != tau_[g][h] * tau_[group_.conj(g, h)][k])
                    return std::array<Element, 3>{g, h, k};
    return std::nullopt;
}

bool Character::trivial() const
{
    for (const auto& v : values)
        if (!v.is_one())
            return false;
    return true;
}

Character restrict_to_centralizer(const TorsionCocycle& tau, Element g)
{
    const FiniteGroup& G = tau.group();
    Character c;
    c.g = g;
    c.domain = centralizer(G, g);
    for (Element h : c.domain)
        c.values.push_back(tau(g, h));
    for (Element h1 : c.domain)
        for (Element h2 : c.domain)
            if (tau(g, G.mul(h1, h2)) != tau(g, h1) * tau(g, h2))
                throw CocycleError("tau(" + G.label(g) + ", .) is not a character of C(" +
                                   G.label(g) + "): fails at (" + G.label(h1) + ", " +
                                   G.label(h2) + ")");
    return c;
}

bool is_alpha_regular(const TorsionCocycle& tau, Element g)
{
    for (Element h : centralizer(tau.group(), g))
        if (!tau(g, h).is_one())
            return false;
    return true;
}

std::vector<std::string> catalog_cocycle_names(const FiniteGroup& group)
{
    std::vector<std::string> out{"trivial", "coboundary"};
    if (group == catalog_group("Z2xZ2"))
        out.push_back("nontrivial");
    return out;
}

TwoCocycle catalog_cocycle(const FiniteGroup& group, const std::string& name)
{
    if (name == "trivial")
        return TwoCocycle(group);
    if (name == "coboundary") {
        std::vector<Phase> beta(group.order());
        for (int x = 1; x < group.order(); ++x)
            beta[x] = Phase::from_fraction(x, 2 * group.order());
        return coboundary(group, beta);
    }
    if (name == "nontrivial" && group == catalog_group("Z2xZ2")) {
        // index = a1 + 2 a2, q = a1 b2 / 2
        PhaseTable t(4, std::vector<Phase>(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                t[a][b] = Phase::from_fraction((a % 2) * (b / 2), 2);
        return TwoCocycle::from_table(group, std::move(t));
    }
    throw CocycleError("no catalog cocycle '" + name + "' for group " + group.name());
}

}  // namespace orbistring
