#include <doctest.h>
#include <orbistring/phase.hpp>

#include <random>

using namespace orbistring;

namespace {

// Z2xZ2 as bit pairs: index = a1 + 2 a2, product = xor.
Rational klein_alpha(int a, int b) { return make_rational((a & 1) * (b >> 1), 2); }

Phase random_phase(std::mt19937_64& rng, int max_den)
{
    const long den = 1 + static_cast<long>(rng() % max_den);
    return Phase::from_fraction(static_cast<long>(rng() % den), den);
}

std::vector<Phase> random_beta(std::mt19937_64& rng, int n)
{
    std::vector<Phase> beta(n);
    for (int x = 1; x < n; ++x)
        beta[x] = random_phase(rng, 6);
    return beta;
}

}  // namespace

TEST_CASE("phase arithmetic")
{
    Phase a = Phase::from_fraction(3, 4), b = Phase::from_fraction(1, 2);
    CHECK((a * b).q() == make_rational(1, 4));
    CHECK(a.inverse().q() == make_rational(1, 4));
    CHECK(Phase::from_fraction(-1, 3).q() == make_rational(2, 3));
    CHECK(Phase::from_fraction(5, 5).is_one());
    CHECK(Phase::from_fraction(1, 4).to_cyclo() == CycloNumber::zeta_power(4, 1));
    CHECK(Phase::from_fraction(1, 2).to_cyclo(4) == CycloNumber(-1, 4));
}

TEST_CASE("the Klein four group table is xor")
{
    FiniteGroup k = catalog_group("Z2xZ2");
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(k.mul(a, b) == (a ^ b));
}

TEST_CASE("is_two_cocycle")
{
    FiniteGroup k = catalog_group("Z2xZ2");
    PhaseTable ones(4, std::vector<Phase>(4));
    CHECK(is_two_cocycle(k, ones).valid);

    PhaseTable t(4, std::vector<Phase>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            t[a][b] = Phase(klein_alpha(a, b));
    CHECK(is_two_cocycle(k, t).valid);

    t[1][3] = t[1][3] * Phase::from_fraction(1, 3);
    auto r = is_two_cocycle(k, t);
    REQUIRE_FALSE(r.valid);
    REQUIRE(r.witness);
    auto [g, h, l] = *r.witness;
    // the witness really breaks the identity
    CHECK(t[g][h] * t[g ^ h][l] != t[g][h ^ l] * t[h][l]);

    CHECK_THROWS_AS(is_two_cocycle(k, PhaseTable(3, std::vector<Phase>(4))), std::invalid_argument);
}

TEST_CASE("normalization divides by alpha(e,e)")
{
    FiniteGroup z3 = catalog_group("Z3");
    PhaseTable c(3, std::vector<Phase>(3, Phase::from_fraction(1, 5)));
    TwoCocycle a = TwoCocycle::from_table(z3, c);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(a(x, y).is_one());
}

TEST_CASE("coboundary")
{
    FiniteGroup z2 = catalog_group("Z2");
    TwoCocycle d = coboundary(z2, {Phase(), Phase::from_fraction(1, 4)});
    CHECK(d(1, 1).q() == make_rational(1, 2));
    CHECK(d(0, 1).is_one());
    TwoCocycle triv = coboundary(z2, {Phase(), Phase()});
    CHECK(triv(1, 1).is_one());
    CHECK_THROWS(coboundary(z2, {Phase::from_fraction(1, 2), Phase()}));
}

TEST_CASE("discrete torsion on the Klein four group")
{
    FiniteGroup k = catalog_group("Z2xZ2");
    TorsionCocycle tau = discrete_torsion(catalog_cocycle(k, "nontrivial"));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const long a1 = a & 1, a2 = a >> 1, b1 = b & 1, b2 = b >> 1;
            CHECK(tau(a, b).q() == mod_one(make_rational(a1 * b2 - a2 * b1, 2)));
        }
    Character chi = restrict_to_centralizer(tau, 1);  // (1,0)
    REQUIRE(chi.domain.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(chi.values[i].q() == make_rational(chi.domain[i] >> 1, 2));
    CHECK(restrict_to_centralizer(tau, 0).trivial());
    CHECK(is_alpha_regular(tau, 0));
    for (int g = 1; g < 4; ++g)
        CHECK_FALSE(is_alpha_regular(tau, g));

    TorsionCocycle t0 = discrete_torsion(TwoCocycle(k));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(t0(a, b).is_one());
}

TEST_CASE("torsion laws for every shipped cocycle")
{
    for (const auto& name : catalog_names()) {
        FiniteGroup G = catalog_group(name);
        for (const auto& cname : catalog_cocycle_names(G)) {
            CAPTURE(name);
            CAPTURE(cname);
            TorsionCocycle tau = discrete_torsion(catalog_cocycle(G, cname));
            CHECK_FALSE(tau.groupoid_law_violation());
            for (Element g = 0; g < G.order(); ++g)
                CHECK_NOTHROW(restrict_to_centralizer(tau, g));
            if (G.is_abelian())
                for (Element g = 0; g < G.order(); ++g)
                    for (Element h = 0; h < G.order(); ++h)
                        CHECK(tau(g, h) == tau(h, g).inverse());
        }
    }
}

TEST_CASE("characters are cohomology invariants")
{
    std::mt19937_64 rng(11);
    for (const auto& name : catalog_names()) {
        FiniteGroup G = catalog_group(name);
        for (const auto& cname : catalog_cocycle_names(G)) {
            TwoCocycle alpha = catalog_cocycle(G, cname);
            for (int trial = 0; trial < 5; ++trial) {
                const auto beta = random_beta(rng, G.order());
                TwoCocycle twisted = alpha * coboundary(G, beta);
                TorsionCocycle t1 = discrete_torsion(alpha), t2 = discrete_torsion(twisted);
                for (Element g = 0; g < G.order(); ++g) {
                    CHECK(restrict_to_centralizer(t1, g).values == restrict_to_centralizer(t2, g).values);
                    // off the centralizer tau moves by beta(g)/beta(h^-1 g h)
                    for (Element h = 0; h < G.order(); ++h)
                        CHECK(t2(g, h) == t1(g, h) * beta[g] / beta[G.conj(g, h)]);
                }
            }
        }
    }
}

TEST_CASE("a perturbed Z4 table is rejected")
{
    FiniteGroup z4 = catalog_group("Z4");
    PhaseTable t(4, std::vector<Phase>(4));
    t[1][2] = Phase::from_fraction(1, 3);
    CHECK_FALSE(is_two_cocycle(z4, t).valid);
    CHECK_THROWS_AS(TwoCocycle::from_table(z4, t), CocycleError);
}
