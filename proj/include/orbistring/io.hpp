#pragma once

// JSON forms of everything the command line reads or writes.
//
// Rationals are [num, den] pairs (a "num/den" string is accepted too and is
// emitted when a value does not fit in 64 bits). Group elements are written
// as labels and read as labels or indices. Regions and lobes are 1-based.
// Cyclotomic coefficients are strings "a0 + a1*z + ..." with z = zeta_level.

#include "orbistring/bv.hpp"
#include "orbistring/cactus.hpp"
#include "orbistring/gchord.hpp"
#include "orbistring/graded.hpp"
#include "orbistring/phase.hpp"
#include "orbistring/sector.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace orbistring {

using json = nlohmann::json;

/// Unreadable input or a document that does not fit the schema.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `arg` is inline JSON when it starts with '{' or '[', a path otherwise.
json read_json(const std::string& arg);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

CycloNumber parse_cyclo(const std::string& text, int level);

// Groups: {"name", "order", "mult"} or {"name", "perm_gens"}. A bare string
// names a group: $ORBISTRING_CATALOG/<name>.json first, then the built-in
// catalog, then a file path.
json group_to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const json& j);
FiniteGroup load_group(const std::string& ref);
Element element_from_json(const FiniteGroup& G, const json& j);

// G-sets: {"group", "size", "act"}. Also accepted on input: {"group",
// "point": true}, {"group", "regular": true}, {"group", "cosets": [gens]}.
json gset_to_json(const GSet& X);
GSet gset_from_json(const json& j);

// Cocycles: {"group", "denominator", "num"}. A bare string is a catalog
// cocycle name, looked up as $ORBISTRING_CATALOG/<group>-<name>.json first.
json cocycle_to_json(const TwoCocycle& alpha);
TwoCocycle cocycle_from_json(const json& j);
TwoCocycle load_cocycle(const FiniteGroup& G, const std::string& ref);
json torsion_to_json(const TorsionCocycle& tau);

// {"basis", "level", "structure": [[i, j, k, coeff], ...], "unit", "trace"}
json ring_to_json(const SectorRing& R);
SectorRing ring_from_json(const json& j);

json classes_to_json(const FiniteGroup& G, const ConjugacyData& c);

// {"n", "chords": [[xn, xd, yn, yd], ...], "marks": [[n, d], ...]} with
// optional "interval_labels". Classes add "clusters" (vertex positions of
// each cluster) and "interval_labels"; their chords are the chain
// representative. Output flags "base_on_vertex" when u = 0 is a vertex.
json diagram_to_json(const ChordDiagram& c);
DiagramData diagram_data_from_json(const json& j);
ChordDiagram diagram_from_json(const json& j);
json class_to_json(const MDClass& d);
/// With "clusters" the class is read directly and checked; otherwise the
/// diagram is validated and canonicalized.
MDClass class_from_json(const json& j);

// {"n", "perimeters", "points": [[[lobe, [n, d]], ...], ...], "base": [lobe, [n, d]]}
// Output also carries the derived flags "base_on_vertex" and "base_at_mark".
json cactus_to_json(const Cactus& k);
Cactus cactus_from_json(const json& j);

// The diagram format plus {"group", "outer", "delta", "lifts"}. Classes add
// "clusters", "interval_labels" and "transport" (one element per vertex).
json gdiagram_to_json(const GDiagram& w);
GDiagram gdiagram_from_json(const json& j);
json gclass_to_json(const FiniteGroup& G, const GMDClass& w);
GMDClass gclass_from_json(const json& j, FiniteGroup* group_out = nullptr);

// Presentations: {"name", "generators": [{"name", "degree", "root_order"}],
// "annihilators": ["a^2", ...]}, or the shorthands {"lens": [n, p]} and
// {"sphere": p}.
json algebra_to_json(const GradedAlgebra& A);
GradedAlgebra algebra_from_json(const json& j);
/// Basis of the window with the products that stay inside it.
json truncated_to_json(const TruncatedAlgebra& T);

// {"algebra", "window": [lo, hi], "delta": [[i, j, c], ...]}: delta(e_i)
// has coefficient c on e_j, indices into the window basis. "algebra" may
// also be {"dw": group}, whose window is fixed.
json bv_to_json(const BVData& D, const json& algebra);
BVData bv_from_json(const json& j);
json bv_report_to_json(const BVReport& r);

}  // namespace orbistring
