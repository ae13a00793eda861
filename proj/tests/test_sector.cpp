#include "oracle.hpp"

#include <doctest.h>
#include <orbistring/sector.hpp>

#include <random>

using namespace orbistring;

namespace {

CycloNumber q(long n, long d = 1) { return CycloNumber(make_rational(n, d)); }

// G-sets with at most `max_size` points: cosets of every cyclic subgroup,
// the point, and the regular action when small.
std::vector<GSet> small_gsets(const FiniteGroup& G, int max_size)
{
    std::vector<GSet> out{GSet::point(G)};
    std::set<std::vector<Element>> seen;
    for (Element s = 0; s < G.order(); ++s) {
        auto h = generated_subgroup(G, {s});
        if (!seen.insert(h).second)
            continue;
        GSet X = GSet::cosets(G, h);
        if (X.size() <= max_size && X.size() > 1)
            out.push_back(X);
    }
    return out;
}

}  // namespace

TEST_CASE("sector product")
{
    FiniteGroup z2 = catalog_group("Z2");
    GSet pt = GSet::point(z2);
    CHECK(sector_product(pt, {1, 0}, {1, 0}) == SectorPair{0, 0});
    GSet x = GSet::from_table(z2, {{0, 1}, {1, 0}, {2, 2}});
    CHECK(sector_product(x, {1, 2}, {1, 2}) == SectorPair{0, 2});
    CHECK_FALSE(sector_product(x, {0, 0}, {0, 1}));
    CHECK_THROWS_AS(sector_product(x, {1, 0}, {0, 0}), SectorError);
}

TEST_CASE("sector product is associative and equivariant")
{
    for (const auto& name : catalog_names()) {
        FiniteGroup G = catalog_group(name);
        if (G.order() > 8)
            continue;
        for (const GSet& X : small_gsets(G, 6)) {
            CAPTURE(name);
            CAPTURE(X.size());
            auto basis = sector_basis(X);
            for (auto a : basis)
                for (auto b : basis) {
                    auto ab = sector_product(X, a, b);
                    for (auto c : basis) {
                        auto bc = sector_product(X, b, c);
                        auto left = ab ? sector_product(X, *ab, c) : std::nullopt;
                        auto right = bc ? sector_product(X, a, *bc) : std::nullopt;
                        CHECK(left == right);
                    }
                    for (Element h = 0; h < G.order(); ++h) {
                        auto moved = sector_product(X, sector_act(X, a, h), sector_act(X, b, h));
                        CHECK(moved == (ab ? std::optional(sector_act(X, *ab, h)) : std::nullopt));
                    }
                }
        }
    }
}

TEST_CASE("point string ring is the class algebra")
{
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        FiniteGroup G = catalog_group(name);
        SectorRing r = orbifold_string_ring(GSet::point(G));
        SectorRing dw = dw_frobenius(G);
        REQUIRE(r.dim() == static_cast<int>(conjugacy_classes(G).classes.size()));
        REQUIRE(dw.dim() == r.dim());
        if (G.permutations().empty())
            continue;
        auto cls = oracle::classes(oracle::closure(
            std::vector<oracle::Perm>(G.permutations().begin() + 1, G.permutations().end())));
        auto ref = oracle::class_constants(cls);
        for (int i = 0; i < r.dim(); ++i)
            for (int j = 0; j < r.dim(); ++j)
                for (int k = 0; k < r.dim(); ++k) {
                    CHECK(r.c(i, j, k) == q(ref[i][j][k]));
                    CHECK(dw.c(i, j, k) == q(ref[i][j][k]));
                }
        CHECK(r.unit_law_holds());
        CHECK(dw.frobenius_nondegenerate());
        CHECK(r.frobenius_nondegenerate());
        CHECK_FALSE(dw.associativity_violation());
        CHECK(dw.is_commutative());
    }
}

TEST_CASE("S3 transposition class squared")
{
    SectorRing dw = dw_frobenius(catalog_group("S3"));
    // basis: e, (2,3)-class, (1,2,3)-class
    CHECK(dw.basis() == std::vector<std::string>{"()", "(2,3)", "(1,2,3)"});
    Vec t = dw.multiply(dw.basis_vector(1), dw.basis_vector(1));
    CHECK(t == Vec{q(3), q(0), q(3)});
    CHECK(*dw.trace() == Vec{q(1, 6), q(0), q(0)});
}

TEST_CASE("free actions and the trivial group")
{
    SectorRing r = orbifold_string_ring(GSet::regular(catalog_group("S3")));
    CHECK(r.dim() == 1);
    CHECK(r.c(0, 0, 0) == q(1));

    FiniteGroup one;
    GSet k = GSet::from_table(one, {{0}, {1}, {2}, {3}});
    SectorRing qk = orbifold_string_ring(k);
    REQUIRE(qk.dim() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l)
                CHECK(qk.c(i, j, l) == q(i == j && j == l ? 1 : 0));
    CHECK(qk.unit() == Vec{q(1), q(1), q(1), q(1)});
}

TEST_CASE("string rings of small G-sets are unital, associative, Frobenius")
{
    for (const auto& name : catalog_names()) {
        FiniteGroup G = catalog_group(name);
        for (const GSet& X : small_gsets(G, 12)) {
            CAPTURE(name);
            CAPTURE(X.size());
            SectorRing r = orbifold_string_ring(X);
            CHECK_FALSE(r.associativity_violation());
            CHECK(r.unit_law_holds());
            CHECK(r.frobenius_nondegenerate());
        }
    }
}

TEST_CASE("twisted centres")
{
    FiniteGroup k = catalog_group("Z2xZ2");
    CHECK(twisted_center(catalog_cocycle(k, "nontrivial")).dim() == 1);
    CHECK(twisted_center(TwoCocycle(k)).dim() == 4);

    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        FiniteGroup G = catalog_group(name);
        SectorRing dw = dw_frobenius(G);
        SectorRing tc = twisted_center(TwoCocycle(G));
        REQUIRE(tc.dim() == dw.dim());
        for (int i = 0; i < dw.dim(); ++i)
            for (int j = 0; j < dw.dim(); ++j)
                for (int l = 0; l < dw.dim(); ++l)
                    CHECK(tc.c(i, j, l) == dw.c(i, j, l));
        for (const auto& cname : catalog_cocycle_names(G)) {
            TwoCocycle alpha = catalog_cocycle(G, cname);
            SectorRing r = twisted_center(alpha);
            CHECK_FALSE(r.associativity_violation());
            CHECK(r.unit_law_holds());
            CHECK(r.frobenius_nondegenerate());
            if (G.is_abelian()) {
                int expect = 0;
                for (Element g = 0; g < G.order(); ++g) {
                    bool ok = true;
                    for (Element h = 0; h < G.order(); ++h)
                        ok = ok && alpha(g, h) == alpha(h, g);
                    expect += ok;
                }
                CHECK(r.dim() == expect);
            }
        }
    }
}

TEST_CASE("coboundary twists rescale the twisted centre")
{
    std::mt19937_64 rng(5);
    for (const auto& name : {"Z4", "Z6", "S3", "D4"}) {
        FiniteGroup G = catalog_group(name);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Phase> beta(G.order());
            for (int x = 1; x < G.order(); ++x)
                beta[x] = Phase::from_fraction(static_cast<long>(rng() % 6), 6);
            TwoCocycle alpha = TwoCocycle(G) * coboundary(G, beta);
            SectorRing plain = twisted_center(TwoCocycle(G));
            SectorRing twisted = twisted_center(alpha);
            REQUIRE(plain.dim() == twisted.dim());
            auto reps = alpha_regular_classes(alpha);
            Matrix images = zero_matrix(plain.dim(), plain.dim());
            for (int i = 0; i < plain.dim(); ++i)
                images[i][i] = beta[reps[i]].to_cyclo();
            CHECK(is_algebra_isomorphism(twisted, plain, images));
        }
    }
}

TEST_CASE("Morita comparisons")
{
    FiniteGroup s3 = catalog_group("S3");
    GSet cosets = GSet::cosets(s3, {s3.parse_element("(1,2)")});
    FiniteGroup z2 = catalog_group("Z2");
    auto rep = morita_compare(cosets, GSet::point(z2));
    CHECK(rep.verdict == MoritaReport::Verdict::isomorphic);
    CHECK(rep.dim_x == 2);
    REQUIRE(rep.witness);
    CHECK(is_algebra_isomorphism(rep.ring_x, rep.ring_y, *rep.witness));

    auto free = morita_compare(GSet::regular(s3), GSet::point(FiniteGroup()));
    CHECK(free.verdict == MoritaReport::Verdict::isomorphic);

    auto dims = morita_compare(GSet::point(z2), GSet::point(catalog_group("Z3")));
    CHECK(dims.verdict == MoritaReport::Verdict::not_isomorphic);
    CHECK(dims.method == "dimension");
}

TEST_CASE("isomorphism by idempotents and spectral obstruction")
{
    FiniteGroup one;
    SectorRing q2 = orbifold_string_ring(GSet::from_table(one, {{0}, {1}}));
    auto rep = compare_rings(dw_frobenius(catalog_group("Z2")), q2);
    CHECK(rep.verdict == MoritaReport::Verdict::isomorphic);
    CHECK(rep.method == "idempotent split");

    SectorRing q3 = orbifold_string_ring(GSet::from_table(one, {{0}, {1}, {2}}));
    auto obs = compare_rings(dw_frobenius(catalog_group("Z3")), q3);
    CHECK(obs.verdict == MoritaReport::Verdict::not_isomorphic);
    CHECK(obs.method == "spectrum");
}
