#pragma once

// Cacti: n circles (lobes) of perimeters r_i with sum 1, glued at
// intersection points into a tree. Lobe coordinates run counterclockwise
// from the lobe's mark s_i. The bijection with MD(n) and the native
// composition of cacti.

#include "orbistring/chord.hpp"

#include <random>
#include <vector>

namespace orbistring {

struct Incidence {
    int lobe = 0;
    Rational coord;
    friend bool operator==(const Incidence& a, const Incidence& b) { return a.lobe == b.lobe && a.coord == b.coord; }
    friend bool operator<(const Incidence& a, const Incidence& b)
    {
        return a.lobe != b.lobe ? a.lobe < b.lobe : a.coord < b.coord;
    }
};

struct Cactus {
    int n = 1;
    std::vector<Rational> perimeters;
    /// Each intersection point lists its lobes in counterclockwise cyclic order.
    std::vector<std::vector<Incidence>> points;
    int base_lobe = 0;
    Rational base_coord;
    // derived by validate_cactus
    bool base_on_vertex = false;  // w sits on an intersection point
    bool base_at_mark = false;    // w coincides with s_j of its lobe
};

/// Tree condition, perimeter sum, coordinate ranges. Sets the two flags and
/// returns the cactus in canonical form (points sorted, each cyclic order
/// starting at its least lobe). Throws ChordError.
Cactus validate_cactus(Cactus k);

bool same_cactus(const Cactus& a, const Cactus& b);

Cactus to_cactus(const MDClass& d);
MDClass from_cactus(const Cactus& k);

/// Lobe i of c is replaced by parts[i] scaled to perimeter r_i, its base
/// point glued to s_i. Lobes are numbered block by block.
Cactus cactus_compose(const Cactus& c, const std::vector<Cactus>& parts);

Cactus random_cactus(std::mt19937_64& rng, int n);

}  // namespace orbistring
