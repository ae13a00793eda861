#include "orbistring/gchord.hpp"

#include <map>
#include <queue>
#include <set>

namespace orbistring {

namespace {

using Kind = LoopPiece::Kind;

void check_element(const FiniteGroup& G, Element a, const std::string& what)
{
    if (!G.contains(a))
        throw GChordError(what + " is not an element of " + G.name());
}

// Word from `from` to every vertex of its cluster along the chords.
std::vector<Element> tree_words(const GDiagram& w, int from)
{
    const auto& c = w.base;
    const auto& G = w.group;
    std::vector<Element> word(c.vertices().size(), -1);
    word[from] = G.identity();
    std::queue<int> todo;
    todo.push(from);
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        for (std::size_t j = 0; j < c.chords().size(); ++j) {
            const int x = c.chord_x(static_cast<int>(j)), y = c.chord_y(static_cast<int>(j));
            if (x == v && word[y] < 0) {
                word[y] = G.mul(w.delta[j], word[v]);
                todo.push(y);
            } else if (y == v && word[x] < 0) {
                word[x] = G.mul(G.inv(w.delta[j]), word[v]);
                todo.push(x);
            }
        }
    }
    return word;
}

// Transports rooted at the least vertex of every cluster.
std::vector<Element> transports(const GDiagram& w)
{
    const auto& c = w.base;
    std::vector<Element> t(c.vertices().size(), -1);
    for (std::size_t v = 0; v < t.size(); ++v)
        if (t[v] < 0) {
            auto word = tree_words(w, static_cast<int>(v));
            for (std::size_t u = 0; u < t.size(); ++u)
                if (word[u] >= 0)
                    t[u] = word[u];
        }
    return t;
}

// Fiber coordinate of the lift at the point where region i's loop starts.
Element start_lift(const GDiagram& w, int i)
{
    const auto& c = w.base;
    const Element k = w.lifts[i];
    auto v = c.vertex_at(c.marks()[i]);
    if (!v)
        return k;
    const int d = c.loop(i).pieces.front().from;
    return w.group.mul(tree_words(w, *v)[d], k);
}

// Word along region i's loop from its start to loop coordinate s; a vertex
// counts as the point where the boundary leaves it.
Element loop_word(const GDiagram& w, int i, const Rational& s)
{
    const auto& G = w.group;
    Element W = G.identity();
    Rational acc = 0;
    for (const auto& p : w.base.loop(i).pieces) {
        if (p.kind == Kind::arc) {
            if (s < acc + p.length) {
                if (p.start + (s - acc) >= 1)
                    W = G.mul(w.outer, W);
                return W;
            }
            if (p.start + p.length >= 1)
                W = G.mul(w.outer, W);
            acc += p.length;
        } else {
            const Element d = w.delta[p.chord];
            W = G.mul(p.forward ? d : G.inv(d), W);
        }
    }
    throw std::logic_error("loop coordinate beyond the perimeter");
}

Element full_loop_word(const GDiagram& w, int i)
{
    const auto& G = w.group;
    Element W = G.identity();
    for (const auto& p : w.base.loop(i).pieces) {
        if (p.kind == Kind::arc) {
            if (p.start + p.length >= 1)
                W = G.mul(w.outer, W);
        } else {
            const Element d = w.delta[p.chord];
            W = G.mul(p.forward ? d : G.inv(d), W);
        }
    }
    return W;
}

// Word of a corner loop; transport T(a -> b) = t_b t_a^-1.
Element corner_word(const FiniteGroup& G, const RegionLoop& loop, Element outer, const std::vector<Element>& t)
{
    Element W = G.identity();
    for (const auto& p : loop.pieces) {
        if (p.kind == Kind::arc) {
            if (p.start + p.length >= 1)
                W = G.mul(outer, W);
        } else {
            W = G.mul(G.mul(t[p.to], G.inv(t[p.from])), W);
        }
    }
    return W;
}

// Transport from the mark to the loop start for a class (marks sit on roots).
Element corner_start(const MDClass& d, const RegionLoop& loop, int i, const std::vector<Element>& t)
{
    auto it = std::lower_bound(d.vertices.begin(), d.vertices.end(), d.marks[i]);
    if (it == d.vertices.end() || *it != d.marks[i])
        return 0;
    return t[loop.pieces.front().from];
}

void check_same_group(const FiniteGroup& a, const FiniteGroup& b)
{
    if (!(a == b))
        throw GChordError("parts use a different group");
}

}  // namespace

GDiagram make_gdiagram(FiniteGroup group, ChordDiagram base, Element outer, std::vector<Element> delta,
                       std::vector<Element> lifts)
{
    if (delta.size() != base.chords().size())
        throw GChordError("expected " + std::to_string(base.chords().size()) + " delta entries, got " +
                          std::to_string(delta.size()));
    if (static_cast<int>(lifts.size()) != base.n())
        throw GChordError("expected " + std::to_string(base.n()) + " lifts, got " + std::to_string(lifts.size()));
    check_element(group, outer, "outer holonomy");
    for (Element d : delta)
        check_element(group, d, "delta entry");
    for (Element k : lifts)
        check_element(group, k, "lift");
    return GDiagram{std::move(group), std::move(base), outer, std::move(delta), std::move(lifts)};
}

GMDClass canonical_gmd(const GDiagram& w)
{
    GMDClass out;
    out.base = canonical_md(w.base);
    out.outer = w.outer;
    out.transport = transports(w);
    const auto& c = w.base;
    for (int i = 0; i < c.n(); ++i) {
        auto v = c.vertex_at(c.marks()[i]);
        out.lifts.push_back(v ? w.group.mul(w.group.inv(out.transport[*v]), w.lifts[i]) : w.lifts[i]);
    }
    return out;
}

GDiagram representative(const FiniteGroup& group, const GMDClass& w)
{
    if (w.transport.size() != w.base.vertices.size() || static_cast<int>(w.lifts.size()) != w.base.n)
        throw GChordError("decoration sizes do not match the base");
    ChordDiagram c = representative(w.base);
    std::vector<Element> delta;
    for (std::size_t j = 0; j < c.chords().size(); ++j) {
        const int x = c.chord_x(static_cast<int>(j)), y = c.chord_y(static_cast<int>(j));
        delta.push_back(group.mul(w.transport[y], group.inv(w.transport[x])));
    }
    GDiagram out = make_gdiagram(group, c, w.outer, delta, w.lifts);
    if (canonical_gmd(out) != w)
        throw GChordError("transports are not normalized on the least vertex of each cluster");
    return out;
}

std::vector<Element> incoming_holonomy(const GDiagram& w)
{
    const auto& G = w.group;
    std::vector<Element> h;
    for (int i = 0; i < w.base.n(); ++i) {
        const Element k = start_lift(w, i);
        h.push_back(G.mul(G.mul(G.inv(k), full_loop_word(w, i)), k));
    }
    return h;
}

std::vector<Element> incoming_holonomy(const FiniteGroup& G, const GMDClass& w)
{
    const auto loops = corner_loops(w.base);
    std::vector<Element> h;
    for (int i = 0; i < w.base.n; ++i) {
        const Element k = G.mul(corner_start(w.base, loops[i], i, w.transport), w.lifts[i]);
        h.push_back(G.mul(G.mul(G.inv(k), corner_word(G, loops[i], w.outer, w.transport)), k));
    }
    return h;
}

Element outgoing_holonomy(const GDiagram& w)
{
    const auto& c = w.base;
    Element k = w.group.identity();
    for (int j = 0; j < c.interval_count(); ++j)
        if (c.interval_start(j) + c.interval_length(j) >= 1)
            k = w.group.mul(w.outer, k);
    return k;
}

GDiagram g_identity(const FiniteGroup& group, Element g)
{
    return make_gdiagram(group, ChordDiagram::identity(), g, {}, {group.identity()});
}

GDiagram g_compose(const GDiagram& w, const std::vector<GDiagram>& parts)
{
    const auto& G = w.group;
    const auto& c = w.base;
    if (static_cast<int>(parts.size()) != c.n())
        throw GChordError("composition needs " + std::to_string(c.n()) + " parts, got " +
                          std::to_string(parts.size()));
    const auto ih = incoming_holonomy(w);
    for (int i = 0; i < c.n(); ++i) {
        check_same_group(G, parts[i].group);
        if (ih[i] != parts[i].outer)
            throw GChordError("holonomy mismatch in slot " + std::to_string(i + 1) + ": region holonomy " +
                              G.label(ih[i]) + ", part outer holonomy " + G.label(parts[i].outer));
    }
    std::vector<ChordDiagram> bases;
    for (const auto& p : parts)
        bases.push_back(p.base);
    ChordDiagram comp = compose(c, bases);

    std::vector<Element> delta, lifts;
    for (int i = 0; i < c.n(); ++i) {
        const Rational r = c.perimeter(i);
        const Element k = start_lift(w, i);
        const auto& p = parts[i];
        for (std::size_t j = 0; j < p.base.chords().size(); ++j) {
            const Element px = loop_word(w, i, r * p.base.chords()[j].x);
            const Element py = loop_word(w, i, r * p.base.chords()[j].y);
            delta.push_back(G.mul(G.mul(G.mul(G.mul(py, k), p.delta[j]), G.inv(k)), G.inv(px)));
        }
        for (int a = 0; a < p.base.n(); ++a)
            lifts.push_back(G.mul(G.mul(loop_word(w, i, r * p.base.marks()[a]), k), p.lifts[a]));
    }
    for (Element d : w.delta)
        delta.push_back(d);
    GDiagram out = make_gdiagram(G, comp, w.outer, delta, lifts);

    std::vector<Element> expect;
    for (const auto& p : parts)
        for (Element h : incoming_holonomy(p))
            expect.push_back(h);
    if (incoming_holonomy(out) != expect || outgoing_holonomy(out) != w.outer)
        throw std::logic_error("composite holonomy does not match its parts");
    return out;
}

GMDClass g_compose(const FiniteGroup& group, const GMDClass& w, const std::vector<GMDClass>& parts)
{
    std::vector<GDiagram> reps;
    for (const auto& p : parts)
        reps.push_back(representative(group, p));
    return canonical_gmd(g_compose(representative(group, w), reps));
}

GDiagram act_on_lifts(const GDiagram& w, const std::vector<Element>& m)
{
    if (m.size() != w.lifts.size())
        throw GChordError("one group element per mark expected");
    GDiagram out = w;
    for (std::size_t i = 0; i < m.size(); ++i)
        out.lifts[i] = w.group.mul(w.lifts[i], m[i]);
    return out;
}

namespace {

long checked_power(long base, int exp, long cap)
{
    long out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
        if (out > cap)
            throw GChordError("search space |G|^(2n-1) exceeds the cap of " + std::to_string(cap));
    }
    return out;
}

// Calls f(transport) for every normalized transport assignment.
template <typename F>
void for_each_transport(const FiniteGroup& G, const MDClass& d, F&& f)
{
    const int m = static_cast<int>(d.vertices.size());
    std::vector<int> free_vertices;
    std::vector<bool> root_seen(d.cluster_count(), false);
    for (int v = 0; v < m; ++v) {
        if (root_seen[d.cluster[v]])
            free_vertices.push_back(v);
        root_seen[d.cluster[v]] = true;
    }
    std::vector<Element> t(m, G.identity());
    while (true) {
        f(t);
        std::size_t a = 0;
        for (; a < free_vertices.size(); ++a) {
            Element& x = t[free_vertices[a]];
            if (++x < G.order())
                break;
            x = 0;
        }
        if (a == free_vertices.size())
            return;
    }
}

}  // namespace

EnumerationReport enumerate_gmd(const FiniteGroup& G, const MDClass& d, Element g, const std::vector<Element>& h,
                                long cap)
{
    check_element(G, g, "outer holonomy");
    if (static_cast<int>(h.size()) != d.n)
        throw GChordError("expected " + std::to_string(d.n) + " inner holonomies");
    for (Element x : h)
        check_element(G, x, "inner holonomy");
    EnumerationReport rep;
    rep.searched = checked_power(G.order(), 2 * d.n - 1, cap);
    const auto loops = corner_loops(d);
    std::vector<std::size_t> centralizer_size;
    for (Element x : h)
        centralizer_size.push_back(centralizer(G, x).size());

    for_each_transport(G, d, [&](const std::vector<Element>& t) {
        // lifts solving k^-1 B k = h_i, region by region
        std::vector<std::vector<Element>> options(d.n);
        for (int i = 0; i < d.n; ++i) {
            const Element s = corner_start(d, loops[i], i, t);
            const Element W = corner_word(G, loops[i], g, t);
            for (Element k = 0; k < G.order(); ++k) {
                const Element ks = G.mul(s, k);
                if (G.mul(G.mul(G.inv(ks), W), ks) == h[i])
                    options[i].push_back(k);
            }
            if (options[i].empty())
                return;
        }
        ++rep.orbits;
        for (int i = 0; i < d.n; ++i)
            if (options[i].size() != centralizer_size[i])
                rep.free_action = false;
        std::vector<std::size_t> pick(d.n, 0);
        while (true) {
            GMDClass w{d, g, t, {}};
            for (int i = 0; i < d.n; ++i)
                w.lifts.push_back(options[i][pick[i]]);
            rep.classes.push_back(std::move(w));
            int a = 0;
            for (; a < d.n; ++a) {
                if (++pick[a] < options[a].size())
                    break;
                pick[a] = 0;
            }
            if (a == d.n)
                break;
        }
    });
    return rep;
}

long decoration_count(const FiniteGroup& G, const MDClass& d, Element g, long cap)
{
    check_element(G, g, "outer holonomy");
    checked_power(G.order(), 2 * d.n - 1, cap);
    std::set<std::vector<Element>> seen;
    for_each_transport(G, d, [&](const std::vector<Element>& t) {
        std::vector<Element> lifts(d.n, 0);
        while (true) {
            GMDClass w{d, g, t, lifts};
            GMDClass back = canonical_gmd(representative(G, w));
            std::vector<Element> key;
            key.insert(key.end(), back.transport.begin(), back.transport.end());
            key.insert(key.end(), back.lifts.begin(), back.lifts.end());
            seen.insert(key);
            int a = 0;
            for (; a < d.n; ++a) {
                if (++lifts[a] < G.order())
                    break;
                lifts[a] = 0;
            }
            if (a == d.n)
                break;
        }
    });
    return static_cast<long>(seen.size());
}

GDiagram random_gdiagram_with_outer(std::mt19937_64& rng, const FiniteGroup& G, int n, Element g, int den)
{
    ChordDiagram c = random_diagram(rng, n, den);
    std::vector<Element> delta, lifts;
    for (std::size_t j = 0; j < c.chords().size(); ++j)
        delta.push_back(static_cast<Element>(rng() % G.order()));
    for (int i = 0; i < n; ++i)
        lifts.push_back(static_cast<Element>(rng() % G.order()));
    return make_gdiagram(G, c, g, delta, lifts);
}

GDiagram random_gdiagram(std::mt19937_64& rng, const FiniteGroup& G, int n, int den)
{
    return random_gdiagram_with_outer(rng, G, n, static_cast<Element>(rng() % G.order()), den);
}

}  // namespace orbistring
