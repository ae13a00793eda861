#pragma once

// Marked chord diagrams on the circle of perimeter 1 with exact rational
// coordinates, their region loops, the quotient MD(n) and operad composition.
//
// Conventions: the circle is [0,1) read counterclockwise, u = 0. Vertices are
// the distinct chord endpoints in increasing order; interval j runs from
// vertex j to vertex j+1 (the last one wraps through 0). With no chords there
// is a single interval covering the circle. Regions are numbered 0..n-1 in
// code and 1..n in JSON.

#include "orbistring/rational.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbistring {

class ChordError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Chord {
    Rational x, y;
    friend bool operator==(const Chord& a, const Chord& b) { return a.x == b.x && a.y == b.y; }
};

struct DiagramData {
    int n = 1;
    std::vector<Chord> chords;
    std::vector<Rational> marks;
    /// Region of every interval; empty means "infer from the marks".
    std::vector<int> interval_labels;
};

/// One step of a region boundary. Arcs carry length; chord jumps (labeled
/// diagrams) and corners (passage through a contracted cluster) do not.
struct LoopPiece {
    enum class Kind { arc, chord, corner };
    Kind kind = Kind::arc;
    int interval = -1;
    Rational start;   // arc: circle position where it begins
    Rational length;  // arc only
    int chord = -1;   // chord jumps
    bool forward = true;  // chord jump goes x -> y
    int from = -1, to = -1;  // vertex indices for chord jumps and corners
};

/// Boundary of one region, read counterclockwise starting at its mark. When
/// the mark sits on a cluster the loop starts where the boundary leaves that
/// cluster.
struct RegionLoop {
    std::vector<LoopPiece> pieces;
    Rational perimeter;
};

/// A validated marked labeled chord diagram.
class ChordDiagram {
public:
    /// Checks chord endpoints, crossings, the forest condition, positive
    /// boundary measure, the region count and the marks. Throws ChordError.
    static ChordDiagram validate(const DiagramData& data);

    /// The unit of the operad: no chords, z_1 = u.
    static ChordDiagram identity();

    int n() const { return n_; }
    const std::vector<Chord>& chords() const { return chords_; }
    const std::vector<Rational>& marks() const { return marks_; }
    const std::vector<Rational>& vertices() const { return vertices_; }
    /// Cluster of each vertex, clusters numbered by their least vertex.
    const std::vector<int>& cluster_of() const { return cluster_; }
    int cluster_count() const { return clusters_; }
    const std::vector<int>& interval_labels() const { return labels_; }
    int interval_count() const { return static_cast<int>(labels_.size()); }
    Rational interval_start(int j) const;
    Rational interval_length(int j) const;
    /// Vertex index of chord endpoint positions.
    int chord_x(int c) const { return chord_ends_[c].first; }
    int chord_y(int c) const { return chord_ends_[c].second; }

    std::optional<int> vertex_at(const Rational& p) const;
    /// Interval whose interior contains p (p must not be a vertex).
    int interval_containing(const Rational& p) const;

    const RegionLoop& loop(int region) const { return loops_[region]; }
    const std::vector<RegionLoop>& loops() const { return loops_; }
    Rational perimeter(int region) const { return loops_[region].perimeter; }

    /// Circle position at loop coordinate s in [0, r). A corner maps to the
    /// vertex where the boundary leaves the cluster.
    Rational loop_point(int region, const Rational& s) const;
    /// Loop coordinate of a point on the closed boundary of the region; a
    /// cluster vertex maps to the region's corner at that cluster.
    Rational loop_coordinate(int region, const Rational& p) const;

    DiagramData data() const;

private:
    int n_ = 1;
    std::vector<Chord> chords_;
    std::vector<Rational> marks_;
    std::vector<Rational> vertices_;
    std::vector<std::pair<int, int>> chord_ends_;
    std::vector<int> cluster_;
    int clusters_ = 0;
    std::vector<int> labels_;
    std::vector<RegionLoop> loops_;
};

/// Canonical data of a class in MD(n): vertex positions with their cluster
/// partition, interval labels and marks, where a mark on a cluster is moved
/// to the cluster's least vertex. Chords are forgotten.
struct MDClass {
    int n = 1;
    std::vector<Rational> vertices;
    std::vector<int> cluster;
    std::vector<int> interval_labels;
    std::vector<Rational> marks;

    int cluster_count() const;
    friend bool operator==(const MDClass& a, const MDClass& b)
    {
        return a.n == b.n && a.vertices == b.vertices && a.cluster == b.cluster &&
               a.interval_labels == b.interval_labels && a.marks == b.marks;
    }
    friend bool operator!=(const MDClass& a, const MDClass& b) { return !(a == b); }
};

MDClass canonical_md(const ChordDiagram& c);

/// Labeled representative: every cluster becomes the chain joining its
/// vertices in counterclockwise order.
ChordDiagram representative(const MDClass& d);

/// Region loops computed from the cluster partition alone: arriving at a
/// cluster vertex, the boundary leaves from the previous vertex of the same
/// cluster (corner pieces instead of chord jumps).
std::vector<RegionLoop> corner_loops(const MDClass& d);

/// New label of region i is sigma[i].
ChordDiagram relabel(const ChordDiagram& c, const std::vector<int>& sigma);
MDClass relabel(const MDClass& d, const std::vector<int>& sigma);

/// Operad composition on labeled diagrams. Part chords come first, block by
/// block, followed by the chords of c; regions are numbered block by block.
ChordDiagram compose(const ChordDiagram& c, const std::vector<ChordDiagram>& parts);
MDClass compose(const MDClass& c, const std::vector<MDClass>& parts);

/// Random valid diagram with n regions; coordinates have denominator `den`.
ChordDiagram random_diagram(std::mt19937_64& rng, int n, int den = 24);

}  // namespace orbistring
