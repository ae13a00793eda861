#pragma once

// Finite groups as full multiplication tables, finite right G-sets, conjugacy
// data, and the built-in group catalog.
//
// Conventions: element 0 is the identity; mul(a, b) is the product "a then b",
// which for permutation groups means (a*b)[i] = b[a[i]].  With this convention
// a G-set is a right action: act(act(m, g), h) == act(m, mul(g, h)).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbistring {

using Element = int;

class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FiniteGroup {
public:
    /// The trivial group.
    FiniteGroup();

    /// Validates closure, identity at index 0, Latin-square rows/columns and
    /// associativity. Failures throw GroupError naming the offending entry.
    static FiniteGroup from_table(std::string name, const std::vector<std::vector<int>>& mult,
                                  std::vector<std::string> labels = {});

    /// Closes the generators under composition. Elements are indexed in
    /// lexicographic order of their one-line images, so the result does not
    /// depend on generator order; labels are 1-based cycle notation.
    static FiniteGroup from_permutations(std::string name,
                                         const std::vector<std::vector<int>>& gens);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    Element identity() const { return 0; }

    Element mul(Element a, Element b) const { return mult_[a * order_ + b]; }
    Element inv(Element a) const { return inv_[a]; }
    /// h^-1 q h
    Element conj(Element q, Element h) const { return mul(mul(inv(h), q), h); }
    Element pow(Element a, long k) const;
    int element_order(Element a) const;
    bool is_abelian() const;
    bool contains(Element a) const { return a >= 0 && a < order_; }

    const std::string& label(Element a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Accepts a label or a decimal index.
    std::optional<Element> find(const std::string& token) const;
    Element parse_element(const std::string& token) const;

    std::vector<std::vector<int>> table() const;
    /// One-line images for permutation-built groups, empty otherwise.
    const std::vector<std::vector<int>>& permutations() const { return perms_; }

    FiniteGroup renamed(std::string name) const;
    FiniteGroup with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
    {
        return a.order_ == b.order_ && a.mult_ == b.mult_;
    }

private:
    std::string name_;
    int order_ = 1;
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> perms_;
};

/// A finite set {0..size-1} with a right action of a finite group.
class GSet {
public:
    static GSet from_table(FiniteGroup group, const std::vector<std::vector<int>>& act);
    static GSet point(FiniteGroup group);
    /// G acting on itself by right translation.
    static GSet regular(FiniteGroup group);
    /// Right cosets H\G with G acting by right translation. The subgroup is
    /// given by element indices and is validated.
    static GSet cosets(FiniteGroup group, const std::vector<Element>& subgroup);

    const FiniteGroup& group() const { return group_; }
    int size() const { return size_; }
    int act(int point, Element g) const { return act_[point * group_.order() + g]; }
    std::vector<std::vector<int>> table() const;

private:
    FiniteGroup group_;
    int size_ = 0;
    std::vector<int> act_;
};

struct ConjugacyData {
    std::vector<std::vector<Element>> classes;   // each sorted, ordered by representative
    std::vector<Element> reps;                   // least index in each class
    std::vector<std::vector<Element>> centralizers;
    std::vector<int> class_of;                   // element -> class index
};

ConjugacyData conjugacy_classes(const FiniteGroup& group);

/// Action of h on Bun_G(S^1) = G under the holonomy isomorphism: h^-1 q h.
Element bun_holonomy_action(const FiniteGroup& group, Element q, Element h);

std::vector<int> fixed_points(const GSet& set, Element g);

std::vector<Element> centralizer(const FiniteGroup& group, Element g);

/// The subgroup on the given elements as a standalone group (identity first,
/// remaining elements in index order, labels kept).
FiniteGroup subgroup(const FiniteGroup& group, std::vector<Element> elements, std::string name);

/// Subgroup generated by the given elements, sorted by index.
std::vector<Element> generated_subgroup(const FiniteGroup& group, const std::vector<Element>& gens);

/// Built-in groups: "1", "Zn" (n >= 1), "S3", "S4", "D4", "Q8", "Z2xZ2".
FiniteGroup catalog_group(const std::string& name);
bool is_catalog_group(const std::string& name);

/// Z1..Z8, S3, S4, D4, Q8, Z2xZ2.
std::vector<std::string> catalog_names();

std::string cycle_notation(const std::vector<int>& perm);

}  // namespace orbistring
