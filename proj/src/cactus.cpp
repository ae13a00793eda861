#include "orbistring/cactus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace orbistring {

namespace {

// Piece of the outer boundary between two consecutive events of the walk.
struct Segment {
    Rational t;       // circle time where it starts
    Rational length;
    int lobe;
    Rational coord;   // lobe coordinate where it starts
    int point;        // intersection point at the start, or -1
};

Rational mod(const Rational& a, const Rational& m)
{
    return mod_one(a / m) * m;
}

// Walks the boundary from w counterclockwise for total time 1.
std::vector<Segment> boundary_walk(const Cactus& k)
{
    // lobe -> (coord, point, position in the point's cyclic order)
    std::vector<std::vector<std::pair<Rational, int>>> on_lobe(k.n);
    for (std::size_t p = 0; p < k.points.size(); ++p)
        for (const auto& inc : k.points[p])
            on_lobe[inc.lobe].emplace_back(inc.coord, static_cast<int>(p));

    std::vector<Segment> out;
    int lobe = k.base_lobe;
    Rational coord = k.base_coord, t = 0;
    int at_point = -1;
    for (const auto& [c, p] : on_lobe[lobe])
        if (c == coord)
            at_point = p;
    const std::size_t guard = 4 * (k.points.size() + k.n) + 4;
    while (t < 1) {
        if (out.size() > guard)
            throw std::logic_error("cactus boundary walk does not close");
        const Rational r = k.perimeters[lobe];
        std::optional<Rational> best;
        int next = -1;
        for (const auto& [c, p] : on_lobe[lobe]) {
            Rational d = mod(c - coord, r);
            if (d == 0)
                d = r;
            if (!best || d < *best) {
                best = d;
                next = p;
            }
        }
        Rational len = best ? *best : Rational(1 - t);
        const bool last = t + len >= 1;
        if (last)
            len = 1 - t;
        out.push_back({t, len, lobe, coord, at_point});
        t += len;
        if (last)
            break;
        const auto& cyc = k.points[next];
        std::size_t m = 0;
        while (cyc[m].lobe != lobe)
            ++m;
        const Incidence& to = cyc[(m + 1) % cyc.size()];
        lobe = to.lobe;
        coord = to.coord;
        at_point = next;
    }
    return out;
}

// Departure convention: a time on a vertex belongs to the segment leaving it.
const Segment& segment_at(const std::vector<Segment>& walk, const Rational& t)
{
    for (const auto& s : walk)
        if (s.t <= t && t < s.t + s.length)
            return s;
    throw std::logic_error("boundary time out of range");
}

Rational corner_coordinate(const RegionLoop& loop, const std::vector<int>& cluster, int c)
{
    Rational acc = 0;
    for (const auto& p : loop.pieces) {
        if (p.kind != LoopPiece::Kind::arc)
            continue;
        if (p.from >= 0 && cluster[p.from] == c)
            return acc;
        acc += p.length;
    }
    throw std::logic_error("region does not touch the cluster");
}

Rational arc_coordinate(const RegionLoop& loop, const Rational& pt)
{
    Rational acc = 0;
    for (const auto& p : loop.pieces) {
        if (p.kind != LoopPiece::Kind::arc)
            continue;
        const Rational d = mod_one(pt - p.start);
        if (d < p.length)
            return acc + d;
        acc += p.length;
    }
    throw std::logic_error("point is not on the region");
}

}  // namespace

Cactus validate_cactus(Cactus k)
{
    if (k.n < 1)
        throw ChordError("a cactus needs at least one lobe");
    if (static_cast<int>(k.perimeters.size()) != k.n)
        throw ChordError("expected " + std::to_string(k.n) + " perimeters");
    Rational sum = 0;
    for (const auto& r : k.perimeters) {
        if (r <= 0)
            throw ChordError("lobe perimeters must be positive");
        sum += r;
    }
    if (sum != 1)
        throw ChordError("lobe perimeters sum to " + sum.get_str() + ", not 1");

    std::vector<std::vector<Rational>> used(k.n);
    std::vector<int> parent(k.n + k.points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t edges = 0;
    for (std::size_t p = 0; p < k.points.size(); ++p) {
        auto& cyc = k.points[p];
        if (cyc.size() < 2)
            throw ChordError("intersection point " + std::to_string(p + 1) + " meets fewer than two lobes");
        for (const auto& inc : cyc) {
            if (inc.lobe < 0 || inc.lobe >= k.n)
                throw ChordError("lobe index out of range");
            if (inc.coord < 0 || inc.coord >= k.perimeters[inc.lobe])
                throw ChordError("lobe coordinate outside [0, r)");
            if (std::find(used[inc.lobe].begin(), used[inc.lobe].end(), inc.coord) != used[inc.lobe].end())
                throw ChordError("two intersection points coincide on lobe " + std::to_string(inc.lobe + 1));
            used[inc.lobe].push_back(inc.coord);
            const int a = find(inc.lobe), b = find(k.n + static_cast<int>(p));
            if (a == b)
                throw ChordError("the dual graph has a cycle");
            parent[a] = b;
            ++edges;
        }
        std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    }
    if (edges + 1 != parent.size())
        throw ChordError("the dual graph is not connected");
    std::sort(k.points.begin(), k.points.end());

    if (k.base_lobe < 0 || k.base_lobe >= k.n)
        throw ChordError("base lobe out of range");
    if (k.base_coord < 0 || k.base_coord >= k.perimeters[k.base_lobe])
        throw ChordError("base coordinate outside [0, r)");
    const auto& u = used[k.base_lobe];
    k.base_on_vertex = std::find(u.begin(), u.end(), k.base_coord) != u.end();
    k.base_at_mark = k.base_coord == 0;
    return k;
}

bool same_cactus(const Cactus& a, const Cactus& b)
{
    Cactus x = validate_cactus(a), y = validate_cactus(b);
    return x.n == y.n && x.perimeters == y.perimeters && x.points == y.points && x.base_lobe == y.base_lobe &&
           x.base_coord == y.base_coord;
}

Cactus to_cactus(const MDClass& d)
{
    const auto loops = corner_loops(d);
    Cactus k;
    k.n = d.n;
    for (const auto& l : loops)
        k.perimeters.push_back(l.perimeter);
    k.points.resize(d.cluster_count());
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        const int lobe = d.interval_labels[v];
        k.points[d.cluster[v]].push_back({lobe, corner_coordinate(loops[lobe], d.cluster, d.cluster[v])});
    }
    if (!d.vertices.empty() && d.vertices[0] == 0) {
        k.base_lobe = d.interval_labels[0];
        k.base_coord = corner_coordinate(loops[k.base_lobe], d.cluster, d.cluster[0]);
    } else {
        k.base_lobe = d.interval_labels.back();
        k.base_coord = arc_coordinate(loops[k.base_lobe], Rational(0));
    }
    return validate_cactus(k);
}

MDClass from_cactus(const Cactus& raw)
{
    const Cactus k = validate_cactus(raw);
    const auto walk = boundary_walk(k);
    MDClass d;
    d.n = k.n;
    std::vector<int> point_of_vertex;
    for (const auto& s : walk)
        if (s.point >= 0 && s.t < 1) {
            d.vertices.push_back(s.t);
            point_of_vertex.push_back(s.point);
            d.interval_labels.push_back(s.lobe);
        }
    if (d.vertices.empty())
        d.interval_labels = {walk.front().lobe};
    // clusters by least vertex
    std::map<int, int> id;
    for (int p : point_of_vertex)
        id.emplace(p, -1);
    int next = 0;
    for (int p : point_of_vertex) {
        int& c = id[p];
        if (c < 0)
            c = next++;
        d.cluster.push_back(c);
    }
    std::vector<Rational> least(next);
    for (int v = static_cast<int>(d.vertices.size()); v-- > 0;)
        least[d.cluster[v]] = d.vertices[v];

    d.marks.assign(k.n, Rational(0));
    std::vector<bool> seen(k.n, false);
    for (const auto& s : walk) {
        const Rational off = mod(-s.coord, k.perimeters[s.lobe]);
        if (off < s.length) {
            Rational z = s.t + off;
            if (off == 0 && s.point >= 0 && s.t < 1)
                z = least[id[s.point]];
            d.marks[s.lobe] = z;
            seen[s.lobe] = true;
        }
    }
    for (bool b : seen)
        if (!b)
            throw std::logic_error("a lobe mark was not reached");
    MDClass check = canonical_md(representative(d));
    if (check != d)
        throw std::logic_error("unrolled cactus is not canonical");
    return d;
}

Cactus cactus_compose(const Cactus& craw, const std::vector<Cactus>& rawparts)
{
    const Cactus c = validate_cactus(craw);
    if (static_cast<int>(rawparts.size()) != c.n)
        throw ChordError("composition needs " + std::to_string(c.n) + " parts, got " +
                         std::to_string(rawparts.size()));
    std::vector<Cactus> parts;
    std::vector<std::vector<Segment>> walks;
    std::vector<int> offset;
    Cactus out;
    out.n = 0;
    for (const auto& p : rawparts) {
        parts.push_back(validate_cactus(p));
        walks.push_back(boundary_walk(parts.back()));
        offset.push_back(out.n);
        out.n += parts.back().n;
    }
    for (int i = 0; i < c.n; ++i) {
        const Rational r = c.perimeters[i];
        for (const auto& q : parts[i].perimeters)
            out.perimeters.push_back(q * r);
        for (const auto& cyc : parts[i].points) {
            std::vector<Incidence> moved;
            for (const auto& inc : cyc)
                moved.push_back({offset[i] + inc.lobe, inc.coord * r});
            out.points.push_back(moved);
        }
    }
    // point index of each part point inside `out`
    std::vector<int> first_point(c.n);
    for (int i = 0, acc = 0; i < c.n; ++i) {
        first_point[i] = acc;
        acc += static_cast<int>(parts[i].points.size());
    }
    // where lobe-i coordinate d lands in the composite
    auto land = [&](int i, const Rational& d) {
        const Rational r = c.perimeters[i];
        const Segment& s = segment_at(walks[i], d / r);
        const Rational along = d / r - s.t;
        Incidence inc{offset[i] + s.lobe, mod(s.coord + along, parts[i].perimeters[s.lobe]) * r};
        const int point = (along == 0 && s.point >= 0) ? first_point[i] + s.point : -1;
        return std::make_pair(inc, point);
    };

    std::vector<bool> absorbed(out.points.size(), false);
    std::vector<std::vector<Incidence>> merged;
    for (const auto& cyc : c.points) {
        std::vector<Incidence> next;
        for (const auto& inc : cyc) {
            auto [at, point] = land(inc.lobe, inc.coord);
            if (point < 0) {
                next.push_back(at);
                continue;
            }
            // splice the part's cyclic order, starting at the departing lobe
            const auto& sub = out.points[point];
            std::size_t m = 0;
            while (!(sub[m] == at))
                ++m;
            for (std::size_t t = 0; t < sub.size(); ++t)
                next.push_back(sub[(m + t) % sub.size()]);
            absorbed[point] = true;
        }
        merged.push_back(next);
    }
    std::vector<std::vector<Incidence>> points;
    for (std::size_t p = 0; p < out.points.size(); ++p)
        if (!absorbed[p])
            points.push_back(out.points[p]);
    for (auto& m : merged)
        points.push_back(m);
    out.points = points;
    auto [base, bp] = land(c.base_lobe, c.base_coord);
    (void)bp;
    out.base_lobe = base.lobe;
    out.base_coord = base.coord;
    return validate_cactus(out);
}

Cactus random_cactus(std::mt19937_64& rng, int n)
{
    auto uniform = [&](int k) { return static_cast<int>(rng() % static_cast<unsigned>(k)); };
    Cactus k;
    k.n = n;
    std::vector<int> weight(n);
    int total = 0;
    for (auto& w : weight)
        total += (w = 1 + uniform(4));
    for (int w : weight)
        k.perimeters.push_back(make_rational(w, total));
    // slot s on lobe L sits at coordinate r_L * s / 6
    const int slots = 6;
    std::vector<std::vector<bool>> taken(n, std::vector<bool>(slots, false));
    auto free_slot = [&](int lobe) {
        std::vector<int> open;
        for (int s = 0; s < slots; ++s)
            if (!taken[lobe][s])
                open.push_back(s);
        const int s = open[uniform(static_cast<int>(open.size()))];
        taken[lobe][s] = true;
        return Incidence{lobe, k.perimeters[lobe] * make_rational(s, slots)};
    };
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int a = 1; a < n; ++a) {
        const int lobe = order[a];
        if (!k.points.empty() && uniform(3) == 0) {
            auto& cyc = k.points[uniform(static_cast<int>(k.points.size()))];
            cyc.insert(cyc.begin() + uniform(static_cast<int>(cyc.size()) + 1), free_slot(lobe));
        } else {
            const int host = order[uniform(a)];
            std::vector<Incidence> cyc{free_slot(host), free_slot(lobe)};
            k.points.push_back(cyc);
        }
    }
    k.base_lobe = uniform(n);
    if (uniform(4) == 0) {
        // on an existing point of that lobe when there is one
        std::vector<Rational> on;
        for (const auto& cyc : k.points)
            for (const auto& inc : cyc)
                if (inc.lobe == k.base_lobe)
                    on.push_back(inc.coord);
        k.base_coord = on.empty() ? Rational(0) : on[uniform(static_cast<int>(on.size()))];
    } else {
        k.base_coord = k.perimeters[k.base_lobe] * make_rational(uniform(2 * slots), 2 * slots);
    }
    return validate_cactus(k);
}

}  // namespace orbistring
