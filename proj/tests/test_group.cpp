#include "oracle.hpp"

#include <doctest.h>
#include <orbistring/group.hpp>

#include <algorithm>
#include <random>

using namespace orbistring;

TEST_CASE("trivial group has one class")
{
    FiniteGroup g;
    auto cd = conjugacy_classes(g);
    REQUIRE(cd.classes.size() == 1);
    CHECK(cd.classes[0] == std::vector<Element>{0});
    CHECK(cd.centralizers[0] == std::vector<Element>{0});
}

TEST_CASE("S3 classes and centralizers")
{
    FiniteGroup s3 = catalog_group("S3");
    auto cd = conjugacy_classes(s3);
    REQUIRE(cd.classes.size() == 3);
    CHECK(cd.classes[0].size() == 1);
    CHECK(cd.classes[1].size() == 3);
    CHECK(cd.classes[2].size() == 2);
    CHECK(s3.label(cd.reps[1]) == "(2,3)");
    CHECK(cd.centralizers[1].size() == 2);

    // against conjugation of raw permutations
    auto ref = oracle::classes(oracle::closure({{1, 0, 2}, {1, 2, 0}}));
    std::multiset<std::size_t> sizes, ref_sizes;
    for (const auto& c : cd.classes)
        sizes.insert(c.size());
    for (const auto& c : ref)
        ref_sizes.insert(c.size());
    CHECK(sizes == ref_sizes);
}

TEST_CASE("Z4 classes are singletons")
{
    FiniteGroup z4 = catalog_group("Z4");
    auto cd = conjugacy_classes(z4);
    CHECK(cd.classes.size() == 4);
    for (const auto& c : cd.centralizers)
        CHECK(c.size() == 4);
}

TEST_CASE("conjugation action on bundles")
{
    FiniteGroup s3 = catalog_group("S3");
    const Element t12 = s3.parse_element("(1,2)");
    const Element c123 = s3.parse_element("(1,2,3)");
    CHECK(s3.label(bun_holonomy_action(s3, t12, c123)) == "(2,3)");
    for (Element q = 0; q < 6; ++q)
        CHECK(bun_holonomy_action(s3, q, 0) == q);
    FiniteGroup z6 = catalog_group("Z6");
    for (Element q = 0; q < 6; ++q)
        for (Element h = 0; h < 6; ++h)
            CHECK(bun_holonomy_action(z6, q, h) == q);
}

TEST_CASE("fixed points")
{
    FiniteGroup z2 = catalog_group("Z2");
    CHECK(fixed_points(GSet::point(z2), 1) == std::vector<int>{0});
    CHECK(fixed_points(GSet::regular(catalog_group("S3")), 3).empty());
    GSet x = GSet::from_table(z2, {{0, 1}, {1, 0}, {2, 2}});
    CHECK(fixed_points(x, 1) == std::vector<int>{2});
}

TEST_CASE("non-associative table is rejected with its triple")
{
    std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    try {
        FiniteGroup::from_table("loop", loop);
        FAIL("accepted a loop");
    } catch (const GroupError& e) {
        CHECK(std::string(e.what()).find("associative at (") != std::string::npos);
    }
}

TEST_CASE("bad action table is rejected")
{
    FiniteGroup z3 = catalog_group("Z3");
    CHECK_THROWS_AS(GSet::from_table(z3, {{0, 1, 1}, {1, 0, 0}}), GroupError);
}

TEST_CASE("permutation closure")
{
    FiniteGroup a = FiniteGroup::from_permutations("a", {{1, 0, 2}, {1, 2, 0}});
    CHECK(a.order() == 6);
    FiniteGroup b = FiniteGroup::from_permutations("b", {{1, 2, 0}, {1, 0, 2}, {0, 2, 1}});
    CHECK(a == b);
    CHECK(a.labels() == b.labels());
}

TEST_CASE("catalog orders")
{
    std::map<std::string, int> expect = {{"Z1", 1}, {"Z5", 5}, {"Z8", 8}, {"S3", 6}, {"S4", 24},
                                         {"D4", 8}, {"Q8", 8}, {"Z2xZ2", 4}};
    for (auto [name, n] : expect)
        CHECK(catalog_group(name).order() == n);
    FiniteGroup q8 = catalog_group("Q8");
    const Element i = q8.parse_element("i"), j = q8.parse_element("j");
    CHECK(q8.label(q8.mul(i, j)) == "k");
    CHECK(q8.label(q8.mul(i, i)) == "-1");
    CHECK(conjugacy_classes(q8).classes.size() == 5);
    CHECK(conjugacy_classes(catalog_group("D4")).classes.size() == 5);
    CHECK(conjugacy_classes(catalog_group("S4")).classes.size() == 5);
    CHECK_THROWS_AS(catalog_group("A5"), GroupError);
}

TEST_CASE("cosets of a subgroup")
{
    FiniteGroup s3 = catalog_group("S3");
    GSet x = GSet::cosets(s3, {s3.parse_element("(1,2)")});
    CHECK(x.size() == 3);
    CHECK_THROWS_AS(GSet::cosets(s3, {s3.parse_element("(1,2)"), s3.parse_element("(2,3)")}), GroupError);
}

TEST_CASE("properties over the catalog")
{
    std::mt19937_64 rng(7);
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        FiniteGroup G = catalog_group(name);
        const int n = G.order();
        auto cd = conjugacy_classes(G);
        std::size_t total = 0;
        for (std::size_t c = 0; c < cd.classes.size(); ++c) {
            total += cd.classes[c].size();
            CHECK(cd.classes[c].size() * cd.centralizers[c].size() == static_cast<std::size_t>(n));
            CHECK(cd.reps[c] == cd.classes[c].front());
        }
        CHECK(total == static_cast<std::size_t>(n));

        // right action: acting by h then k equals acting by hk
        for (Element q = 0; q < n; ++q)
            for (Element h = 0; h < n; ++h)
                for (Element k = 0; k < n; k += 3)
                    CHECK(bun_holonomy_action(G, bun_holonomy_action(G, q, h), k) ==
                          bun_holonomy_action(G, q, G.mul(h, k)));

        // conjugation permutes sectors of the coset spaces of cyclic subgroups
        for (Element s = 0; s < n; ++s) {
            GSet X = GSet::cosets(G, generated_subgroup(G, {s}));
            for (Element g = 0; g < n; ++g) {
                const Element h = static_cast<Element>(rng() % n);
                std::vector<int> moved;
                for (int m : fixed_points(X, g))
                    moved.push_back(X.act(m, h));
                std::sort(moved.begin(), moved.end());
                CHECK(fixed_points(X, G.conj(g, h)) == moved);
            }
        }

        // closure does not depend on generator order
        if (!G.permutations().empty()) {
            std::vector<std::vector<int>> gens(G.permutations().begin() + 1, G.permutations().end());
            std::shuffle(gens.begin(), gens.end(), rng);
            gens.resize(std::min<std::size_t>(gens.size(), 3));
            FiniteGroup a = FiniteGroup::from_permutations("a", gens);
            std::reverse(gens.begin(), gens.end());
            FiniteGroup b = FiniteGroup::from_permutations("b", gens);
            CHECK(a == b);
        }
    }
}
