#include <doctest.h>
#include <orbistring/chord.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace orbistring;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

DiagramData make(int n, std::vector<Chord> chords, std::vector<Rational> marks)
{
    DiagramData d;
    d.n = n;
    d.chords = std::move(chords);
    d.marks = std::move(marks);
    return d;
}

// Oracle: two intervals lie in one region iff no chord separates their
// midpoints. Independent of any face traversal.
std::vector<std::vector<int>> separation_classes(const ChordDiagram& c)
{
    const int m = c.interval_count();
    std::vector<Rational> mid(m);
    for (int j = 0; j < m; ++j)
        mid[j] = mod_one(c.interval_start(j) + c.interval_length(j) / 2);
    auto inside = [](const Chord& ch, const Rational& p) {
        Rational d = mod_one(p - ch.x);
        return d > 0 && d < mod_one(ch.y - ch.x);
    };
    std::vector<int> cls(m, -1);
    int next = 0;
    for (int i = 0; i < m; ++i) {
        if (cls[i] >= 0)
            continue;
        for (int j = i; j < m; ++j) {
            bool separated = false;
            for (const auto& ch : c.chords())
                if (inside(ch, mid[i]) != inside(ch, mid[j]))
                    separated = true;
            if (!separated)
                cls[j] = next;
        }
        ++next;
    }
    std::map<int, std::vector<int>> groups;
    for (int j = 0; j < m; ++j)
        groups[cls[j]].push_back(j);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : groups)
        out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> label_classes(const ChordDiagram& c)
{
    std::map<int, std::vector<int>> groups;
    for (int j = 0; j < c.interval_count(); ++j)
        groups[c.interval_labels()[j]].push_back(j);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : groups)
        out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::tuple<int, Rational, Rational>> arcs_of(const RegionLoop& loop)
{
    std::vector<std::tuple<int, Rational, Rational>> out;
    for (const auto& p : loop.pieces)
        if (p.kind == LoopPiece::Kind::arc)
            out.emplace_back(p.interval, p.start, p.length);
    return out;
}

std::vector<int> random_perm(std::mt19937_64& rng, int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

std::vector<ChordDiagram> random_parts(std::mt19937_64& rng, int count, int max_total)
{
    std::vector<ChordDiagram> parts;
    int budget = max_total - count;
    for (int i = 0; i < count; ++i) {
        int extra = budget > 0 ? static_cast<int>(rng() % (std::min(budget, 2) + 1)) : 0;
        budget -= extra;
        parts.push_back(random_diagram(rng, 1 + extra));
    }
    return parts;
}

}  // namespace

TEST_CASE("the one-region diagram")
{
    for (auto z : {r(0), r(1, 3), r(99, 100)}) {
        auto c = ChordDiagram::validate(make(1, {}, {z}));
        CHECK(c.perimeter(0) == 1);
        CHECK(c.interval_count() == 1);
    }
    auto e = ChordDiagram::identity();
    CHECK(e.marks() == std::vector<Rational>{r(0)});
}

TEST_CASE("validation errors")
{
    CHECK_THROWS_WITH_AS(ChordDiagram::validate(make(3, {{r(1, 10), r(4, 10)}, {r(2, 10), r(6, 10)}},
                                                     {r(0), r(1, 2), r(3, 4)})),
                         "chords 1 and 2 cross", ChordError);
    // triangle
    CHECK_THROWS_WITH_AS(ChordDiagram::validate(make(4, {{r(0), r(1, 4)}, {r(1, 4), r(1, 2)}, {r(1, 2), r(0)}},
                                                     {r(1, 8), r(3, 8), r(3, 4), r(0)})),
                         "chord 3 closes a cycle in graph(c)", ChordError);
    // a doubled chord is a cycle of length two
    CHECK_THROWS_AS(ChordDiagram::validate(make(3, {{r(0), r(1, 2)}, {r(1, 2), r(0)}}, {r(1, 4), r(3, 4), r(0)})),
                    ChordError);
    CHECK_THROWS_AS(ChordDiagram::validate(make(2, {{r(1, 3), r(1, 3)}}, {r(0), r(1, 2)})), ChordError);
    CHECK_THROWS_AS(ChordDiagram::validate(make(2, {{r(1, 3), r(1)}}, {r(0), r(1, 2)})), ChordError);
    CHECK_THROWS_AS(ChordDiagram::validate(make(2, {}, {r(0), r(1, 2)})), ChordError);
    // both marks in the same region
    CHECK_THROWS_WITH_AS(ChordDiagram::validate(make(2, {{r(1, 4), r(3, 4)}}, {r(1, 2), r(5, 8)})),
                         "marks cannot be placed one per region", ChordError);
    // explicit labels that put z_1 in the wrong region
    DiagramData d = make(2, {{r(1, 4), r(3, 4)}}, {r(1, 2), r(0)});
    d.interval_labels = {1, 0};
    CHECK_THROWS_AS(ChordDiagram::validate(d), ChordError);
    d.interval_labels = {0, 1};
    CHECK_NOTHROW(ChordDiagram::validate(d));
}

TEST_CASE("single chord regions")
{
    auto c = ChordDiagram::validate(make(2, {{r(1, 5), r(7, 10)}}, {r(1, 2), r(9, 10)}));
    CHECK(c.perimeter(0) == r(1, 2));
    CHECK(c.perimeter(1) == r(1, 2));
    auto c2 = ChordDiagram::validate(make(2, {{r(1, 10), r(4, 10)}}, {r(0), r(1, 5)}));
    CHECK(c2.perimeter(0) == r(7, 10));
    CHECK(c2.perimeter(1) == r(3, 10));
}

TEST_CASE("shared endpoint example")
{
    auto c = ChordDiagram::validate(make(3, {{r(1, 8), r(3, 8)}, {r(3, 8), r(5, 8)}}, {r(1, 4), r(1, 2), r(3, 4)}));
    CHECK(c.perimeter(0) == r(1, 4));
    CHECK(c.perimeter(1) == r(1, 4));
    CHECK(c.perimeter(2) == r(1, 2));
    CHECK(c.cluster_count() == 1);
    CHECK(label_classes(c) == separation_classes(c));
    // region 3 passes both chords
    int jumps = 0;
    for (const auto& p : c.loop(2).pieces)
        jumps += p.kind == LoopPiece::Kind::chord;
    CHECK(jumps == 2);
}

TEST_CASE("face traversal agrees with the separation oracle")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 400; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto c = random_diagram(rng, n);
        REQUIRE(label_classes(c) == separation_classes(c));
        Rational total = 0;
        for (int i = 0; i < n; ++i)
            total += c.perimeter(i);
        CHECK(total == 1);
        for (int i = 0; i < n; ++i) {
            CHECK(c.loop_coordinate(i, c.marks()[i]) == 0);
            CHECK(c.loop_point(i, 0) == (c.vertex_at(c.marks()[i]) ? c.loop_point(i, 0) : c.marks()[i]));
        }
    }
}

TEST_CASE("corner loops match chord loops")
{
    std::mt19937_64 rng(12);
    for (int it = 0; it < 400; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto c = random_diagram(rng, n);
        auto loops = corner_loops(canonical_md(c));
        for (int i = 0; i < n; ++i) {
            REQUIRE(arcs_of(loops[i]) == arcs_of(c.loop(i)));
            CHECK(loops[i].perimeter == c.perimeter(i));
        }
    }
}

TEST_CASE("canonical form is invariant under chord moves")
{
    std::mt19937_64 rng(13);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 3);
        auto c = random_diagram(rng, n);
        const MDClass base = canonical_md(c);
        CHECK(canonical_md(representative(base)) == base);
        std::vector<int> order(n - 1);
        std::iota(order.begin(), order.end(), 0);
        do {
            for (int flips = 0; flips < (1 << (n - 1)); ++flips) {
                DiagramData d = c.data();
                d.chords.clear();
                for (int k = 0; k < n - 1; ++k) {
                    Chord ch = c.chords()[order[k]];
                    if (flips >> k & 1)
                        std::swap(ch.x, ch.y);
                    d.chords.push_back(ch);
                }
                REQUIRE(canonical_md(ChordDiagram::validate(d)) == base);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("forest related diagrams")
{
    std::vector<Rational> marks{r(1, 8), r(3, 8), r(5, 8), r(7, 8)};
    auto chain = ChordDiagram::validate(make(4, {{r(0), r(1, 4)}, {r(1, 4), r(1, 2)}, {r(1, 2), r(3, 4)}}, marks));
    auto star = ChordDiagram::validate(make(4, {{r(0), r(1, 4)}, {r(0), r(1, 2)}, {r(0), r(3, 4)}}, marks));
    auto other = ChordDiagram::validate(make(4, {{r(1, 4), r(3, 4)}, {r(0), r(3, 4)}, {r(1, 2), r(1, 4)}}, marks));
    CHECK(canonical_md(chain) == canonical_md(star));
    CHECK(canonical_md(other) == canonical_md(star));
    // a mark on a cluster is moved to the least vertex
    auto a = ChordDiagram::validate(make(2, {{r(1, 4), r(3, 4)}}, {r(3, 4), r(0)}));
    auto b = ChordDiagram::validate(make(2, {{r(1, 4), r(3, 4)}}, {r(1, 4), r(0)}));
    CHECK(canonical_md(a) == canonical_md(b));
    CHECK(canonical_md(a).marks[0] == r(1, 4));
    auto moved = ChordDiagram::validate(make(2, {{r(1, 4), r(3, 4)}}, {r(1, 2), r(0)}));
    CHECK(canonical_md(a) != canonical_md(moved));
}

TEST_CASE("marks on clusters need explicit labels when ambiguous")
{
    // both regions touch the only cluster
    CHECK_THROWS_AS(ChordDiagram::validate(make(2, {{r(1, 4), r(3, 4)}}, {r(1, 4), r(3, 4)})), ChordError);
    DiagramData d = make(2, {{r(1, 4), r(3, 4)}}, {r(1, 4), r(3, 4)});
    d.interval_labels = {1, 0};
    auto c = ChordDiagram::validate(d);
    CHECK(c.perimeter(0) == r(1, 2));
}

TEST_CASE("unit laws")
{
    std::mt19937_64 rng(14);
    auto e = ChordDiagram::identity();
    for (int it = 0; it < 300; ++it) {
        int n = 1 + static_cast<int>(rng() % 5);
        auto c = random_diagram(rng, n);
        CHECK(canonical_md(compose(e, {c})) == canonical_md(c));
        CHECK(canonical_md(compose(c, std::vector<ChordDiagram>(n, e))) == canonical_md(c));
    }
    auto one = ChordDiagram::validate(make(2, {{r(1, 3), r(2, 3)}}, {r(1, 2), r(0)}));
    CHECK(canonical_md(compose(one, {e, e})) == canonical_md(one));
}

TEST_CASE("composition of parts")
{
    // a chord in a half circle region lands in the half circle
    DiagramData half = make(2, {{r(0), r(1, 2)}}, {r(0), r(1, 2)});
    half.interval_labels = {0, 1};
    auto c = ChordDiagram::validate(half);
    auto p = ChordDiagram::validate(make(2, {{r(1, 4), r(3, 4)}}, {r(0), r(1, 2)}));
    auto comp = compose(c, {p, ChordDiagram::identity()});
    CHECK(comp.n() == 3);
    CHECK(comp.chords()[0] == Chord{r(1, 8), r(3, 8)});
    CHECK(comp.chords()[1] == Chord{r(0), r(1, 2)});
    CHECK(comp.perimeter(0) == r(1, 4));
    CHECK(comp.perimeter(1) == r(1, 4));
    CHECK(comp.perimeter(2) == r(1, 2));
    CHECK_THROWS_AS(compose(c, {p}), ChordError);
}

TEST_CASE("associativity on random diagrams")
{
    std::mt19937_64 rng(15);
    int checked = 0;
    for (int it = 0; it < 1000; ++it) {
        int m = 1 + static_cast<int>(rng() % 3);
        auto c = random_diagram(rng, m);
        auto mid = random_parts(rng, m, 4);
        int total = 0;
        for (const auto& p : mid)
            total += p.n();
        auto last = random_parts(rng, total, 5);

        auto left = compose(compose(c, mid), last);
        std::vector<ChordDiagram> grouped;
        int at = 0;
        for (const auto& p : mid) {
            std::vector<ChordDiagram> sub(last.begin() + at, last.begin() + at + p.n());
            grouped.push_back(compose(p, sub));
            at += p.n();
        }
        auto right = compose(c, grouped);
        REQUIRE(canonical_md(left) == canonical_md(right));
        Rational sum = 0;
        for (int i = 0; i < left.n(); ++i)
            sum += left.perimeter(i);
        CHECK(sum == 1);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("equivariance under relabeling")
{
    std::mt19937_64 rng(16);
    for (int it = 0; it < 1000; ++it) {
        int m = 1 + static_cast<int>(rng() % 3);
        auto c = random_diagram(rng, m);
        auto parts = random_parts(rng, m, 5);
        auto sigma = random_perm(rng, m);

        std::vector<ChordDiagram> moved(m, ChordDiagram::identity());
        for (int i = 0; i < m; ++i)
            moved[sigma[i]] = parts[i];
        auto lhs = compose(relabel(c, sigma), moved);

        // block permutation of the original composite
        std::vector<int> offset_old(m), offset_new(m);
        for (int i = 0, acc = 0; i < m; ++i) {
            offset_old[i] = acc;
            acc += parts[i].n();
        }
        for (int k = 0, acc = 0; k < m; ++k) {
            offset_new[k] = acc;
            acc += moved[k].n();
        }
        auto comp = compose(c, parts);
        std::vector<int> block(comp.n());
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < parts[i].n(); ++a)
                block[offset_old[i] + a] = offset_new[sigma[i]] + a;
        REQUIRE(canonical_md(lhs) == canonical_md(relabel(comp, block)));

        // relabeling inside one part
        int i = static_cast<int>(rng() % m);
        auto tau = random_perm(rng, parts[i].n());
        auto parts2 = parts;
        parts2[i] = relabel(parts[i], tau);
        std::vector<int> inner(comp.n());
        std::iota(inner.begin(), inner.end(), 0);
        for (int a = 0; a < parts[i].n(); ++a)
            inner[offset_old[i] + a] = offset_old[i] + tau[a];
        REQUIRE(canonical_md(compose(c, parts2)) == canonical_md(relabel(comp, inner)));
    }
}

TEST_CASE("class composition")
{
    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
        int m = 1 + static_cast<int>(rng() % 3);
        auto c = random_diagram(rng, m);
        auto parts = random_parts(rng, m, 5);
        std::vector<MDClass> cls;
        for (const auto& p : parts)
            cls.push_back(canonical_md(p));
        REQUIRE(compose(canonical_md(c), cls) == canonical_md(compose(c, parts)));
    }
}
