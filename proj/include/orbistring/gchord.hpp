#pragma once

// G-marked chord diagrams. The bundle Q_g over the circle is trivialized on
// [0,1) with one seam at u = 0: a point is (s, k), G acts on the right, and
// crossing the seam counterclockwise sends k to g*k. A chord x -> y carries
// the equivariant map (x, k) -> (y, delta*k).

#include "orbistring/chord.hpp"
#include "orbistring/group.hpp"

#include <random>
#include <vector>

namespace orbistring {

class GChordError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Labeled G-diagram: one delta per chord, one lift per mark.
struct GDiagram {
    FiniteGroup group;
    ChordDiagram base;
    Element outer = 0;
    std::vector<Element> delta;
    std::vector<Element> lifts;
};

GDiagram make_gdiagram(FiniteGroup group, ChordDiagram base, Element outer, std::vector<Element> delta,
                       std::vector<Element> lifts);

/// Canonical class in GMD(n, g). For each cluster the delta chains are
/// replaced by transports t_v (t = e on the least vertex, t_y = delta*t_x
/// along x -> y), which is the subcluster partition. A lift on a cluster
/// vertex v is moved to the least vertex: k -> t_v^-1 k.
struct GMDClass {
    MDClass base;
    Element outer = 0;
    std::vector<Element> transport;  // per vertex
    std::vector<Element> lifts;
    friend bool operator==(const GMDClass& a, const GMDClass& b)
    {
        return a.base == b.base && a.outer == b.outer && a.transport == b.transport && a.lifts == b.lifts;
    }
    friend bool operator!=(const GMDClass& a, const GMDClass& b) { return !(a == b); }
};

GMDClass canonical_gmd(const GDiagram& w);
/// Chain representative: chord (v_k, v_k+1) of a cluster carries t_{k+1} t_k^-1.
GDiagram representative(const FiniteGroup& group, const GMDClass& w);

/// Region holonomies by walking chords of the labeled diagram.
std::vector<Element> incoming_holonomy(const GDiagram& w);
/// The same from the class data alone, walking corners.
std::vector<Element> incoming_holonomy(const FiniteGroup& group, const GMDClass& w);

/// Walks the whole outer circle from (0, e) ignoring chords.
Element outgoing_holonomy(const GDiagram& w);

/// Unit in GMD(1, g): no chords, z = u, lift e, outer g. For g = e this is
/// the trivial bundle.
GDiagram g_identity(const FiniteGroup& group, Element g = 0);

/// Requires ih(w)_i = oh(parts[i]). Chord and region numbering as in compose.
GDiagram g_compose(const GDiagram& w, const std::vector<GDiagram>& parts);
GMDClass g_compose(const FiniteGroup& group, const GMDClass& w, const std::vector<GMDClass>& parts);

/// Apply k_i -> k_i m_i to the lifts.
GDiagram act_on_lifts(const GDiagram& w, const std::vector<Element>& m);

struct EnumerationReport {
    std::vector<GMDClass> classes;
    long searched = 0;
    /// Orbits of the centralizer product C(h_1) x ... x C(h_n) acting on the
    /// lifts; the action is free.
    int orbits = 0;
    bool free_action = true;
};

/// All decorations over d with outer g and inner holonomy h. Throws when
/// |G|^(2n-1) exceeds `cap`.
EnumerationReport enumerate_gmd(const FiniteGroup& group, const MDClass& d, Element g,
                                const std::vector<Element>& h, long cap = 2'000'000);

/// Distinct classes over d with outer g and any inner holonomy, each one
/// pushed through a representative and back.
long decoration_count(const FiniteGroup& group, const MDClass& d, Element g, long cap = 2'000'000);

GDiagram random_gdiagram(std::mt19937_64& rng, const FiniteGroup& group, int n, int den = 24);
/// Random decoration of a random diagram with prescribed outer holonomy.
GDiagram random_gdiagram_with_outer(std::mt19937_64& rng, const FiniteGroup& group, int n, Element g,
                                    int den = 24);

}  // namespace orbistring
