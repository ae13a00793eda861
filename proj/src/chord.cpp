#include "orbistring/chord.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace orbistring {

namespace {

using Kind = LoopPiece::Kind;

std::string pos(const Rational& r) { return r.get_str(); }

// p strictly inside the counterclockwise arc from a to b
bool strictly_inside(const Rational& a, const Rational& b, const Rational& p)
{
    const Rational d = mod_one(p - a);
    return d > 0 && d < mod_one(b - a);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

Rational interval_start_of(const std::vector<Rational>& v, int j)
{
    return v.empty() ? Rational(0) : v[j];
}

Rational interval_length_of(const std::vector<Rational>& v, int j)
{
    if (v.empty())
        return 1;
    const int m = static_cast<int>(v.size());
    return j + 1 < m ? Rational(v[j + 1] - v[j]) : Rational(v[0] + 1 - v[m - 1]);
}

int interval_count_of(const std::vector<Rational>& v) { return v.empty() ? 1 : static_cast<int>(v.size()); }

int interval_containing_of(const std::vector<Rational>& v, const Rational& p)
{
    if (v.empty())
        return 0;
    auto it = std::upper_bound(v.begin(), v.end(), p);
    if (it == v.begin())
        return static_cast<int>(v.size()) - 1;
    return static_cast<int>(it - v.begin()) - 1;
}

std::optional<int> vertex_at_of(const std::vector<Rational>& v, const Rational& p)
{
    auto it = std::lower_bound(v.begin(), v.end(), p);
    if (it != v.end() && *it == p)
        return static_cast<int>(it - v.begin());
    return std::nullopt;
}

LoopPiece arc_piece(const std::vector<Rational>& v, int j)
{
    LoopPiece a;
    a.kind = Kind::arc;
    a.interval = j;
    a.start = interval_start_of(v, j);
    a.length = interval_length_of(v, j);
    if (!v.empty()) {
        a.from = j;
        a.to = (j + 1) % static_cast<int>(v.size());
    }
    return a;
}

// Cluster ids numbered by least vertex.
std::vector<int> canonical_clusters(UnionFind& uf, int m, int& count)
{
    std::vector<int> out(m, -1);
    std::map<int, int> id;
    for (int v = 0; v < m; ++v) {
        const int root = uf.find(v);
        auto it = id.find(root);
        if (it == id.end())
            it = id.emplace(root, static_cast<int>(id.size())).first;
        out[v] = it->second;
    }
    count = static_cast<int>(id.size());
    return out;
}

struct Skeleton {
    std::vector<Rational> vertices;
    std::vector<std::pair<int, int>> ends;
    std::vector<int> cluster;
    int clusters = 0;
    std::vector<std::vector<LoopPiece>> faces;  // cyclic, each starts with an arc
    std::vector<int> face_of_interval;
};

Skeleton build_skeleton(const std::vector<Chord>& chords)
{
    Skeleton s;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        const Chord& c = chords[i];
        for (const Rational* p : {&c.x, &c.y})
            if (*p < 0 || *p >= 1)
                throw ChordError("chord " + std::to_string(i + 1) + " has an endpoint outside [0,1): " + pos(*p));
        if (c.x == c.y)
            throw ChordError("chord " + std::to_string(i + 1) + " has equal endpoints " + pos(c.x));
        s.vertices.push_back(c.x);
        s.vertices.push_back(c.y);
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    const int m = static_cast<int>(s.vertices.size());
    for (const auto& c : chords)
        s.ends.emplace_back(*vertex_at_of(s.vertices, c.x), *vertex_at_of(s.vertices, c.y));

    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            const Chord &a = chords[i], &b = chords[j];
            if (a.x == b.x || a.x == b.y || a.y == b.x || a.y == b.y)
                continue;  // shared endpoints never cross; doubled chords fail the forest test
            if (strictly_inside(a.x, a.y, b.x) != strictly_inside(a.x, a.y, b.y))
                throw ChordError("chords " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " cross");
        }

    UnionFind uf(m);
    for (std::size_t i = 0; i < chords.size(); ++i)
        if (!uf.unite(s.ends[i].first, s.ends[i].second))
            throw ChordError("chord " + std::to_string(i + 1) + " closes a cycle in graph(c)");
    s.cluster = canonical_clusters(uf, m, s.clusters);

    // rotation at each vertex: chords by counterclockwise offset to the far end
    struct Spoke {
        Rational offset;
        int chord;
        int other;
        bool forward;
    };
    std::vector<std::vector<Spoke>> rot(m);
    for (std::size_t i = 0; i < chords.size(); ++i) {
        auto [x, y] = s.ends[i];
        rot[x].push_back({mod_one(s.vertices[y] - s.vertices[x]), static_cast<int>(i), y, true});
        rot[y].push_back({mod_one(s.vertices[x] - s.vertices[y]), static_cast<int>(i), x, false});
    }
    for (auto& r : rot)
        std::sort(r.begin(), r.end(), [](const Spoke& a, const Spoke& b) { return a.offset < b.offset; });

    const int nint = interval_count_of(s.vertices);
    s.face_of_interval.assign(nint, -1);
    for (int start = 0; start < nint; ++start) {
        if (s.face_of_interval[start] >= 0)
            continue;
        const int f = static_cast<int>(s.faces.size());
        std::vector<LoopPiece> face;
        int j = start;
        for (int guard = 0; guard <= 4 * (nint + static_cast<int>(chords.size())) + 4; ++guard) {
            s.face_of_interval[j] = f;
            face.push_back(arc_piece(s.vertices, j));
            if (m == 0)
                break;
            // arrived at vertex w on the in-arc: leave on the chord of largest offset
            int w = (j + 1) % m;
            int next_interval = -1;
            if (rot[w].empty()) {
                next_interval = w;
            } else {
                std::size_t p = rot[w].size() - 1;
                while (true) {
                    const Spoke& sp = rot[w][p];
                    LoopPiece jump;
                    jump.kind = Kind::chord;
                    jump.chord = sp.chord;
                    jump.forward = sp.forward;
                    jump.from = w;
                    jump.to = sp.other;
                    face.push_back(jump);
                    const int arrived = sp.other;
                    // position of this chord in the rotation at the far end
                    const auto& r2 = rot[arrived];
                    std::size_t q = 0;
                    while (r2[q].chord != sp.chord)
                        ++q;
                    if (q == 0) {
                        next_interval = arrived;
                        break;
                    }
                    w = arrived;
                    p = q - 1;
                }
            }
            if (next_interval == start)
                break;
            if (s.face_of_interval[next_interval] >= 0)
                throw std::logic_error("face traversal entered another face");
            j = next_interval;
        }
        s.faces.push_back(std::move(face));
    }
    return s;
}

bool face_touches_cluster(const std::vector<LoopPiece>& face, const std::vector<int>& cluster, int c)
{
    for (const auto& p : face)
        if (p.kind == Kind::arc && p.from >= 0 && cluster[p.from] == c)
            return true;
    return false;
}

// Rotates a cyclic face so it starts at the mark, splitting an arc if needed.
RegionLoop rotate_to_mark(const std::vector<LoopPiece>& face, const Rational& mark,
                          const std::vector<Rational>& vertices, const std::vector<int>& cluster,
                          int region)
{
    RegionLoop loop;
    for (const auto& p : face)
        if (p.kind == Kind::arc)
            loop.perimeter += p.length;
    const std::size_t k = face.size();
    if (auto v = vertex_at_of(vertices, mark)) {
        for (std::size_t i = 0; i < k; ++i)
            if (face[i].kind == Kind::arc && face[i].from >= 0 && cluster[face[i].from] == cluster[*v]) {
                for (std::size_t t = 0; t < k; ++t)
                    loop.pieces.push_back(face[(i + t) % k]);
                return loop;
            }
        throw ChordError("mark " + std::to_string(region + 1) + " at " + pos(mark) +
                         " is not on the boundary of its region");
    }
    for (std::size_t i = 0; i < k; ++i) {
        const LoopPiece& a = face[i];
        if (a.kind != Kind::arc)
            continue;
        const Rational d = mod_one(mark - a.start);
        if (d >= a.length)
            continue;
        if (d == 0) {
            for (std::size_t t = 0; t < k; ++t)
                loop.pieces.push_back(face[(i + t) % k]);
            return loop;
        }
        LoopPiece head = a, tail = a;
        head.start = mark;
        head.length = a.length - d;
        head.from = -1;
        tail.length = d;
        tail.to = -1;
        loop.pieces.push_back(head);
        for (std::size_t t = 1; t < k; ++t)
            loop.pieces.push_back(face[(i + t) % k]);
        loop.pieces.push_back(tail);
        return loop;
    }
    throw ChordError("mark " + std::to_string(region + 1) + " at " + pos(mark) +
                     " is not on the boundary of its region");
}

// Which faces a mark may belong to.
std::vector<int> mark_candidates(const Skeleton& s, const Rational& z)
{
    std::vector<int> out;
    if (auto v = vertex_at_of(s.vertices, z)) {
        for (std::size_t f = 0; f < s.faces.size(); ++f)
            if (face_touches_cluster(s.faces[f], s.cluster, s.cluster[*v]))
                out.push_back(static_cast<int>(f));
    } else {
        out.push_back(s.face_of_interval[interval_containing_of(s.vertices, z)]);
    }
    return out;
}

// Face -> region from the marks; requires a unique matching.
std::vector<int> labels_from_marks(const Skeleton& s, const std::vector<Rational>& marks)
{
    const int n = static_cast<int>(marks.size());
    std::vector<std::vector<int>> cand(n);
    for (int i = 0; i < n; ++i)
        cand[i] = mark_candidates(s, marks[i]);
    std::vector<int> region_of_face(n, -1), found;
    int solutions = 0;
    std::vector<int> face_of_region(n, -1);
    std::vector<bool> used(n, false);
    auto search = [&](auto&& self, int i) -> void {
        if (solutions > 1)
            return;
        if (i == n) {
            if (++solutions == 1)
                found = face_of_region;
            return;
        }
        for (int f : cand[i])
            if (!used[f]) {
                used[f] = true;
                face_of_region[i] = f;
                self(self, i + 1);
                used[f] = false;
            }
    };
    search(search, 0);
    if (solutions == 0)
        throw ChordError("marks cannot be placed one per region");
    if (solutions > 1)
        throw ChordError("marks on cluster vertices leave the region labels ambiguous; give interval_labels");
    for (int i = 0; i < n; ++i)
        region_of_face[found[i]] = i;
    return region_of_face;
}

}  // namespace

// ------------------------------------------------------------ ChordDiagram

ChordDiagram ChordDiagram::validate(const DiagramData& data)
{
    if (data.n < 1)
        throw ChordError("n must be at least 1");
    if (static_cast<int>(data.chords.size()) != data.n - 1)
        throw ChordError("a diagram with n = " + std::to_string(data.n) + " needs " + std::to_string(data.n - 1) +
                         " chords, got " + std::to_string(data.chords.size()));
    if (static_cast<int>(data.marks.size()) != data.n)
        throw ChordError("expected " + std::to_string(data.n) + " marks, got " + std::to_string(data.marks.size()));
    for (const auto& z : data.marks)
        if (z < 0 || z >= 1)
            throw ChordError("mark outside [0,1): " + pos(z));

    Skeleton s = build_skeleton(data.chords);
    const int nf = static_cast<int>(s.faces.size());
    if (nf != data.n)
        throw ChordError(std::to_string(data.chords.size()) + " chords cut out " + std::to_string(nf) + " regions");
    for (int f = 0; f < nf; ++f) {
        Rational len = 0;
        for (const auto& p : s.faces[f])
            if (p.kind == Kind::arc)
                len += p.length;
        if (len <= 0)
            throw ChordError("a region meets the circle in a set of measure zero");
    }

    std::vector<int> region_of_face(nf, -1);
    const int nint = interval_count_of(s.vertices);
    if (!data.interval_labels.empty()) {
        if (static_cast<int>(data.interval_labels.size()) != nint)
            throw ChordError("expected " + std::to_string(nint) + " interval labels, got " +
                             std::to_string(data.interval_labels.size()));
        for (int j = 0; j < nint; ++j) {
            const int lab = data.interval_labels[j];
            if (lab < 0 || lab >= data.n)
                throw ChordError("interval label out of range");
            int& r = region_of_face[s.face_of_interval[j]];
            if (r >= 0 && r != lab)
                throw ChordError("interval " + std::to_string(j) + " disagrees with its region's label");
            r = lab;
        }
        std::vector<int> sorted = region_of_face;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < nf; ++i)
            if (sorted[i] != i)
                throw ChordError("interval labels do not number the regions 1..n");
    } else {
        region_of_face = labels_from_marks(s, data.marks);
    }

    ChordDiagram c;
    c.n_ = data.n;
    c.chords_ = data.chords;
    c.marks_ = data.marks;
    c.vertices_ = s.vertices;
    c.chord_ends_ = s.ends;
    c.cluster_ = s.cluster;
    c.clusters_ = s.clusters;
    c.labels_.resize(nint);
    for (int j = 0; j < nint; ++j)
        c.labels_[j] = region_of_face[s.face_of_interval[j]];
    c.loops_.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const int r = region_of_face[f];
        c.loops_[r] = rotate_to_mark(s.faces[f], data.marks[r], s.vertices, s.cluster, r);
    }
    return c;
}

ChordDiagram ChordDiagram::identity()
{
    DiagramData d;
    d.n = 1;
    d.marks = {Rational(0)};
    return validate(d);
}

Rational ChordDiagram::interval_start(int j) const { return interval_start_of(vertices_, j); }
Rational ChordDiagram::interval_length(int j) const { return interval_length_of(vertices_, j); }
std::optional<int> ChordDiagram::vertex_at(const Rational& p) const { return vertex_at_of(vertices_, p); }
int ChordDiagram::interval_containing(const Rational& p) const { return interval_containing_of(vertices_, p); }

Rational ChordDiagram::loop_point(int region, const Rational& s) const
{
    const RegionLoop& loop = loops_.at(region);
    if (s < 0 || s >= loop.perimeter)
        throw ChordError("loop coordinate outside [0, r)");
    Rational acc = 0;
    for (const auto& p : loop.pieces) {
        if (p.kind != Kind::arc)
            continue;
        if (s < acc + p.length)
            return mod_one(p.start + (s - acc));
        acc += p.length;
    }
    throw std::logic_error("loop coordinate not reached");
}

Rational ChordDiagram::loop_coordinate(int region, const Rational& pt) const
{
    const RegionLoop& loop = loops_.at(region);
    Rational acc = 0;
    if (auto v = vertex_at(pt)) {
        for (const auto& p : loop.pieces) {
            if (p.kind != Kind::arc)
                continue;
            if (p.from >= 0 && cluster_[p.from] == cluster_[*v])
                return acc;
            acc += p.length;
        }
    } else {
        for (const auto& p : loop.pieces) {
            if (p.kind != Kind::arc)
                continue;
            const Rational d = mod_one(pt - p.start);
            if (d < p.length)
                return acc + d;
            acc += p.length;
        }
    }
    throw ChordError("point " + pos(pt) + " is not on the boundary of region " + std::to_string(region + 1));
}

DiagramData ChordDiagram::data() const
{
    DiagramData d;
    d.n = n_;
    d.chords = chords_;
    d.marks = marks_;
    d.interval_labels = labels_;
    return d;
}

// ----------------------------------------------------------------- MD(n)

int MDClass::cluster_count() const
{
    return cluster.empty() ? 0 : *std::max_element(cluster.begin(), cluster.end()) + 1;
}

MDClass canonical_md(const ChordDiagram& c)
{
    MDClass d;
    d.n = c.n();
    d.vertices = c.vertices();
    d.cluster = c.cluster_of();
    d.interval_labels = c.interval_labels();
    std::vector<Rational> least(c.cluster_count());
    for (int v = static_cast<int>(d.vertices.size()); v-- > 0;)
        least[d.cluster[v]] = d.vertices[v];
    for (const auto& z : c.marks()) {
        auto v = c.vertex_at(z);
        d.marks.push_back(v ? least[d.cluster[*v]] : z);
    }
    return d;
}

ChordDiagram representative(const MDClass& d)
{
    if (d.cluster.size() != d.vertices.size())
        throw ChordError("cluster list does not match the vertex list");
    DiagramData data;
    data.n = d.n;
    data.marks = d.marks;
    data.interval_labels = d.interval_labels;
    std::map<int, std::vector<Rational>> members;
    for (std::size_t v = 0; v < d.vertices.size(); ++v)
        members[d.cluster[v]].push_back(d.vertices[v]);
    for (const auto& [id, vs] : members) {
        if (vs.size() < 2)
            throw ChordError("cluster " + std::to_string(id) + " has a single vertex");
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            data.chords.push_back({vs[i], vs[i + 1]});
    }
    ChordDiagram c = ChordDiagram::validate(data);
    if (c.vertices() != d.vertices || c.cluster_of() != d.cluster)
        throw ChordError("vertex or cluster data is not canonical");
    return c;
}

std::vector<RegionLoop> corner_loops(const MDClass& d)
{
    const auto& V = d.vertices;
    const int m = static_cast<int>(V.size());
    std::map<int, std::vector<int>> members;
    for (int v = 0; v < m; ++v)
        members[d.cluster[v]].push_back(v);
    std::vector<int> previous(m, -1);
    for (const auto& [id, vs] : members)
        for (std::size_t i = 0; i < vs.size(); ++i)
            previous[vs[i]] = vs[(i + vs.size() - 1) % vs.size()];

    const int nint = interval_count_of(V);
    std::vector<int> face_of_interval(nint, -1);
    std::vector<std::vector<LoopPiece>> faces;
    for (int start = 0; start < nint; ++start) {
        if (face_of_interval[start] >= 0)
            continue;
        std::vector<LoopPiece> face;
        int j = start;
        while (true) {
            face_of_interval[j] = static_cast<int>(faces.size());
            face.push_back(arc_piece(V, j));
            if (m == 0)
                break;
            const int a = (j + 1) % m;
            LoopPiece corner;
            corner.kind = Kind::corner;
            corner.from = a;
            corner.to = previous[a];
            face.push_back(corner);
            j = previous[a];
            if (j == start)
                break;
        }
        faces.push_back(std::move(face));
    }
    if (static_cast<int>(faces.size()) != d.n)
        throw ChordError("cluster data cuts out the wrong number of regions");
    std::vector<RegionLoop> loops(d.n);
    std::vector<bool> seen(d.n, false);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const int r = d.interval_labels[faces[f].front().interval];
        for (const auto& p : faces[f])
            if (p.kind == Kind::arc && d.interval_labels[p.interval] != r)
                throw ChordError("interval labels are not constant on a region");
        if (seen[r])
            throw ChordError("two regions share a label");
        seen[r] = true;
        loops[r] = rotate_to_mark(faces[f], d.marks[r], V, d.cluster, r);
    }
    return loops;
}

namespace {

void check_permutation(const std::vector<int>& sigma, int n)
{
    std::vector<bool> seen(n, false);
    if (static_cast<int>(sigma.size()) != n)
        throw ChordError("relabeling has the wrong length");
    for (int s : sigma) {
        if (s < 0 || s >= n || seen[s])
            throw ChordError("relabeling is not a permutation");
        seen[s] = true;
    }
}

}  // namespace

ChordDiagram relabel(const ChordDiagram& c, const std::vector<int>& sigma)
{
    check_permutation(sigma, c.n());
    DiagramData d = c.data();
    for (int i = 0; i < c.n(); ++i)
        d.marks[sigma[i]] = c.marks()[i];
    for (auto& l : d.interval_labels)
        l = sigma[l];
    return ChordDiagram::validate(d);
}

MDClass relabel(const MDClass& d, const std::vector<int>& sigma)
{
    check_permutation(sigma, d.n);
    MDClass out = d;
    for (int i = 0; i < d.n; ++i)
        out.marks[sigma[i]] = d.marks[i];
    for (auto& l : out.interval_labels)
        l = sigma[l];
    return out;
}

// ------------------------------------------------------------ composition

ChordDiagram compose(const ChordDiagram& c, const std::vector<ChordDiagram>& parts)
{
    if (static_cast<int>(parts.size()) != c.n())
        throw ChordError("composition needs " + std::to_string(c.n()) + " parts, got " + std::to_string(parts.size()));
    DiagramData out;
    std::vector<int> offset;
    out.n = 0;
    for (int i = 0; i < c.n(); ++i) {
        offset.push_back(out.n);
        out.n += parts[i].n();
        const Rational r = c.perimeter(i);
        auto place = [&](const Rational& t) { return c.loop_point(i, r * t); };
        for (const auto& ch : parts[i].chords())
            out.chords.push_back({place(ch.x), place(ch.y)});
        for (const auto& z : parts[i].marks())
            out.marks.push_back(place(z));
    }
    for (const auto& ch : c.chords())
        out.chords.push_back(ch);

    // label each composite interval through its midpoint
    std::vector<Rational> V;
    for (const auto& ch : out.chords) {
        V.push_back(ch.x);
        V.push_back(ch.y);
    }
    std::sort(V.begin(), V.end());
    V.erase(std::unique(V.begin(), V.end()), V.end());
    const int nint = interval_count_of(V);
    for (int j = 0; j < nint; ++j) {
        const Rational mid = V.empty() ? make_rational(1, 2)
                                       : mod_one(interval_start_of(V, j) + interval_length_of(V, j) / 2);
        const int i = c.interval_labels()[c.interval_containing(mid)];
        const Rational t = c.loop_coordinate(i, mid) / c.perimeter(i);
        const ChordDiagram& p = parts[i];
        out.interval_labels.push_back(offset[i] + p.interval_labels()[p.interval_containing(t)]);
    }
    return ChordDiagram::validate(out);
}

MDClass compose(const MDClass& c, const std::vector<MDClass>& parts)
{
    std::vector<ChordDiagram> reps;
    for (const auto& p : parts)
        reps.push_back(representative(p));
    return canonical_md(compose(representative(c), reps));
}

// ----------------------------------------------------------------- random

ChordDiagram random_diagram(std::mt19937_64& rng, int n, int den)
{
    if (n < 1)
        throw ChordError("n must be at least 1");
    auto uniform = [&](int k) { return static_cast<int>(rng() % static_cast<unsigned>(k)); };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Chord> chords;
        if (n > 1) {
            const int m = std::min(den, n + uniform(n - 1));
            std::vector<int> slots(den);
            std::iota(slots.begin(), slots.end(), 0);
            std::shuffle(slots.begin(), slots.end(), rng);
            slots.resize(m);
            std::vector<Rational> pts;
            for (int k : slots)
                pts.push_back(make_rational(k, den));
            UnionFind uf(m);
            for (int tries = 0; tries < 400 && static_cast<int>(chords.size()) < n - 1; ++tries) {
                const int a = uniform(m), b = uniform(m);
                if (a == b || uf.find(a) == uf.find(b))
                    continue;
                Chord cand{pts[a], pts[b]};
                bool ok = true;
                for (const auto& e : chords) {
                    if (e.x == cand.x || e.x == cand.y || e.y == cand.x || e.y == cand.y)
                        continue;
                    if (strictly_inside(e.x, e.y, cand.x) != strictly_inside(e.x, e.y, cand.y)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
                uf.unite(a, b);
                chords.push_back(cand);
            }
            if (static_cast<int>(chords.size()) < n - 1)
                continue;
        }
        Skeleton s = build_skeleton(chords);
        if (static_cast<int>(s.faces.size()) != n)
            continue;
        std::vector<int> label(n);
        std::iota(label.begin(), label.end(), 0);
        std::shuffle(label.begin(), label.end(), rng);
        DiagramData d;
        d.n = n;
        d.chords = chords;
        d.marks.resize(n);
        for (int f = 0; f < n; ++f) {
            std::vector<const LoopPiece*> arcs;
            for (const auto& p : s.faces[f])
                if (p.kind == Kind::arc)
                    arcs.push_back(&p);
            const LoopPiece& a = *arcs[uniform(static_cast<int>(arcs.size()))];
            Rational z;
            if (a.from >= 0 && uniform(4) == 0) {
                // a vertex of the cluster the arc leaves from
                std::vector<int> same;
                for (std::size_t v = 0; v < s.vertices.size(); ++v)
                    if (s.cluster[v] == s.cluster[a.from])
                        same.push_back(static_cast<int>(v));
                z = s.vertices[same[uniform(static_cast<int>(same.size()))]];
            } else {
                z = mod_one(a.start + a.length * make_rational(1 + uniform(3), 4));
            }
            d.marks[label[f]] = z;
        }
        for (int j = 0; j < interval_count_of(s.vertices); ++j)
            d.interval_labels.push_back(label[s.face_of_interval[j]]);
        return ChordDiagram::validate(d);
    }
    throw ChordError("could not generate a random diagram");
}

}  // namespace orbistring
