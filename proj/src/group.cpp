#include "orbistring/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace orbistring {

namespace {

std::string triple(int a, int b, int c)
{
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b)
{
    // "a then b"
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = b[a[i]];
    return out;
}

void check_permutation(const std::vector<int>& p, std::size_t degree)
{
    if (p.size() != degree)
        throw GroupError("permutation generators must all have the same degree");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
            throw GroupError("generator is not a permutation of 0..k-1");
        seen[v] = true;
    }
}

}  // namespace

FiniteGroup::FiniteGroup() : name_("1"), order_(1), mult_{0}, inv_{0}, labels_{"e"} {}

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& mult,
                                    std::vector<std::string> labels)
{
    const int n = static_cast<int>(mult.size());
    if (n == 0)
        throw GroupError("empty multiplication table");
    FiniteGroup g;
    g.name_ = std::move(name);
    g.order_ = n;
    g.mult_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mult[a].size()) != n)
            throw GroupError("row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b) {
            int v = mult[a][b];
            if (v < 0 || v >= n)
                throw GroupError("entry mult(" + std::to_string(a) + "," + std::to_string(b) +
                                 ") out of range");
            g.mult_[a * n + b] = v;
        }
    }
    for (int x = 0; x < n; ++x) {
        if (g.mul(0, x) != x || g.mul(x, 0) != x)
            throw GroupError("element 0 is not the identity (fails at " + std::to_string(x) + ")");
    }
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[g.mul(a, b)])
                throw GroupError("row " + std::to_string(a) + " is not a permutation");
            if (col[g.mul(b, a)])
                throw GroupError("column " + std::to_string(a) + " is not a permutation");
            row[g.mul(a, b)] = true;
            col[g.mul(b, a)] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw GroupError("multiplication is not associative at " + triple(a, b, c));
    g.inv_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0)
                g.inv_[a] = b;
    if (labels.empty()) {
        labels.resize(n);
        for (int a = 0; a < n; ++a)
            labels[a] = std::to_string(a);
    }
    if (static_cast<int>(labels.size()) != n)
        throw GroupError("label count does not match group order");
    g.labels_ = std::move(labels);
    return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string name,
                                           const std::vector<std::vector<int>>& gens)
{
    std::size_t degree = gens.empty() ? 1 : gens.front().size();
    for (const auto& p : gens)
        check_permutation(p, degree);

    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
            for (const auto& s : gens) {
                auto q = compose_perm(p, s);
                if (seen.insert(q).second)
                    next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    // std::set iterates lexicographically; the identity is the least element.
    std::vector<std::vector<int>> elems(seen.begin(), seen.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index[elems[i]] = static_cast<int>(i);

    const int n = static_cast<int>(elems.size());
    FiniteGroup g;
    g.name_ = std::move(name);
    g.order_ = n;
    g.mult_.assign(static_cast<std::size_t>(n) * n, 0);
    g.inv_.assign(n, 0);
    g.labels_.resize(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int c = index.at(compose_perm(elems[a], elems[b]));
            g.mult_[a * n + b] = c;
            if (c == 0)
                g.inv_[a] = b;
        }
        g.labels_[a] = cycle_notation(elems[a]);
    }
    g.perms_ = std::move(elems);
    return g;
}

Element FiniteGroup::pow(Element a, long k) const
{
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Element out = 0;
    for (long i = 0; i < k; ++i)
        out = mul(out, a);
    return out;
}

int FiniteGroup::element_order(Element a) const
{
    int k = 1;
    for (Element x = a; x != 0; x = mul(x, a))
        ++k;
    return k;
}

bool FiniteGroup::is_abelian() const
{
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::optional<Element> FiniteGroup::find(const std::string& token) const
{
    for (int a = 0; a < order_; ++a)
        if (labels_[a] == token)
            return a;
    if (!token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        long v = std::stol(token);
        if (v < order_)
            return static_cast<Element>(v);
    }
    return std::nullopt;
}

Element FiniteGroup::parse_element(const std::string& token) const
{
    auto e = find(token);
    if (!e)
        throw GroupError("unknown element '" + token + "' in group " + name_);
    return *e;
}

std::vector<std::vector<int>> FiniteGroup::table() const
{
    std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            out[a][b] = mul(a, b);
    return out;
}

FiniteGroup FiniteGroup::renamed(std::string name) const
{
    FiniteGroup g = *this;
    g.name_ = std::move(name);
    return g;
}

FiniteGroup FiniteGroup::with_labels(std::vector<std::string> labels) const
{
    if (static_cast<int>(labels.size()) != order_)
        throw GroupError("label count does not match group order");
    FiniteGroup g = *this;
    g.labels_ = std::move(labels);
    return g;
}

std::string cycle_notation(const std::vector<int>& perm)
{
    std::vector<bool> done(perm.size(), false);
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (done[i] || perm[i] == static_cast<int>(i))
            continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first)
                out += ",";
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(perm[j]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- G-sets

GSet GSet::from_table(FiniteGroup group, const std::vector<std::vector<int>>& act)
{
    GSet s;
    const int order = group.order();
    s.size_ = static_cast<int>(act.size());
    if (s.size_ == 0)
        throw GroupError("G-set must be non-empty");
    s.act_.assign(static_cast<std::size_t>(s.size_) * order, 0);
    for (int m = 0; m < s.size_; ++m) {
        if (static_cast<int>(act[m].size()) != order)
            throw GroupError("action row " + std::to_string(m) + " must have one entry per group element");
        for (int g = 0; g < order; ++g) {
            int v = act[m][g];
            if (v < 0 || v >= s.size_)
                throw GroupError("act(" + std::to_string(m) + "," + std::to_string(g) + ") out of range");
            s.act_[m * order + g] = v;
        }
    }
    s.group_ = std::move(group);
    for (int m = 0; m < s.size_; ++m) {
        if (s.act(m, 0) != m)
            throw GroupError("identity does not fix point " + std::to_string(m));
        for (int g = 0; g < order; ++g)
            for (int h = 0; h < order; ++h)
                if (s.act(s.act(m, g), h) != s.act(m, s.group_.mul(g, h)))
                    throw GroupError("not a right action at " + triple(m, g, h));
    }
    return s;
}

GSet GSet::point(FiniteGroup group)
{
    std::vector<std::vector<int>> act(1, std::vector<int>(group.order(), 0));
    return from_table(std::move(group), act);
}

GSet GSet::regular(FiniteGroup group)
{
    std::vector<std::vector<int>> act(group.order(), std::vector<int>(group.order()));
    for (int m = 0; m < group.order(); ++m)
        for (int g = 0; g < group.order(); ++g)
            act[m][g] = group.mul(m, g);
    return from_table(std::move(group), act);
}

GSet GSet::cosets(FiniteGroup group, const std::vector<Element>& subgroup_elems)
{
    std::vector<Element> h = generated_subgroup(group, subgroup_elems);
    std::set<Element> given(subgroup_elems.begin(), subgroup_elems.end());
    given.insert(0);
    if (std::vector<Element>(given.begin(), given.end()) != h)
        throw GroupError("given elements do not form a subgroup");
    // coset of x: the sorted set {h x}
    std::map<std::vector<Element>, int> coset_index;
    std::vector<int> coset_of(group.order());
    for (int x = 0; x < group.order(); ++x) {
        std::vector<Element> c;
        for (Element s : h)
            c.push_back(group.mul(s, x));
        std::sort(c.begin(), c.end());
        auto it = coset_index.find(c);
        if (it == coset_index.end())
            it = coset_index.emplace(c, static_cast<int>(coset_index.size())).first;
        coset_of[x] = it->second;
    }
    // renumber cosets by least representative
    std::vector<int> rep(coset_index.size(), -1);
    for (int x = 0; x < group.order(); ++x)
        if (rep[coset_of[x]] < 0)
            rep[coset_of[x]] = x;
    std::vector<std::vector<int>> act(rep.size(), std::vector<int>(group.order()));
    for (std::size_t m = 0; m < rep.size(); ++m)
        for (int g = 0; g < group.order(); ++g)
            act[m][g] = coset_of[group.mul(rep[m], g)];
    return from_table(std::move(group), act);
}

std::vector<std::vector<int>> GSet::table() const
{
    std::vector<std::vector<int>> out(size_, std::vector<int>(group_.order()));
    for (int m = 0; m < size_; ++m)
        for (int g = 0; g < group_.order(); ++g)
            out[m][g] = act(m, g);
    return out;
}

// ------------------------------------------------------------ conjugacy

ConjugacyData conjugacy_classes(const FiniteGroup& group)
{
    ConjugacyData d;
    const int n = group.order();
    d.class_of.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (d.class_of[g] >= 0)
            continue;
        const int idx = static_cast<int>(d.reps.size());
        std::set<Element> orbit;
        for (int h = 0; h < n; ++h)
            orbit.insert(group.conj(g, h));
        for (Element x : orbit)
            d.class_of[x] = idx;
        d.classes.emplace_back(orbit.begin(), orbit.end());
        d.reps.push_back(g);
        d.centralizers.push_back(centralizer(group, g));
    }
    return d;
}

Element bun_holonomy_action(const FiniteGroup& group, Element q, Element h)
{
    return group.conj(q, h);
}

std::vector<int> fixed_points(const GSet& set, Element g)
{
    std::vector<int> out;
    for (int m = 0; m < set.size(); ++m)
        if (set.act(m, g) == m)
            out.push_back(m);
    return out;
}

std::vector<Element> centralizer(const FiniteGroup& group, Element g)
{
    std::vector<Element> out;
    for (int h = 0; h < group.order(); ++h)
        if (group.mul(g, h) == group.mul(h, g))
            out.push_back(h);
    return out;
}

std::vector<Element> generated_subgroup(const FiniteGroup& group, const std::vector<Element>& gens)
{
    std::set<Element> seen{0};
    std::vector<Element> frontier{0};
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (Element x : frontier)
            for (Element s : gens) {
                if (!group.contains(s))
                    throw GroupError("element index out of range");
                Element y = group.mul(x, s);
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

FiniteGroup subgroup(const FiniteGroup& group, std::vector<Element> elements, std::string name)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != 0)
        throw GroupError("subgroup must contain the identity");
    std::map<Element, int> pos;
    for (std::size_t i = 0; i < elements.size(); ++i)
        pos[elements[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> mult(elements.size(), std::vector<int>(elements.size()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        labels.push_back(group.label(elements[i]));
        for (std::size_t j = 0; j < elements.size(); ++j) {
            auto it = pos.find(group.mul(elements[i], elements[j]));
            if (it == pos.end())
                throw GroupError("elements are not closed under multiplication");
            mult[i][j] = it->second;
        }
    }
    return FiniteGroup::from_table(std::move(name), mult, std::move(labels));
}

// --------------------------------------------------------------- catalog

namespace {

std::optional<int> cyclic_order(const std::string& name)
{
    if (name == "1")
        return 1;
    if (name.size() < 2 || name[0] != 'Z')
        return std::nullopt;
    const std::string digits = name.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    if (digits.size() > 4)
        return std::nullopt;
    int n = std::stoi(digits);
    if (n < 1)
        return std::nullopt;
    return n;
}

FiniteGroup quaternion_group()
{
    // elements: index = 4*sign + unit, unit 0..3 = 1,i,j,k
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto qmul = [](int a, int b) {
        int sign = (a / 4 + b / 4 + unit_sign[a % 4][b % 4]) % 2;
        return 4 * sign + unit_mul[a % 4][b % 4];
    };
    auto right_mult = [&](int q) {
        std::vector<int> p(8);
        for (int x = 0; x < 8; ++x)
            p[x] = qmul(x, q);
        return p;
    };
    FiniteGroup g = FiniteGroup::from_permutations("Q8", {right_mult(1), right_mult(2)});
    static const char* names[8] = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    std::vector<std::string> labels;
    for (const auto& p : g.permutations())
        labels.emplace_back(names[p[0]]);  // x -> x q sends 1 to q
    return g.with_labels(std::move(labels));
}

}  // namespace

bool is_catalog_group(const std::string& name)
{
    return cyclic_order(name) || name == "S3" || name == "S4" || name == "D4" || name == "Q8" ||
           name == "Z2xZ2";
}

FiniteGroup catalog_group(const std::string& name)
{
    if (auto n = cyclic_order(name)) {
        if (*n == 1)
            return FiniteGroup().renamed(name);
        std::vector<int> c(*n);
        for (int i = 0; i < *n; ++i)
            c[i] = (i + 1) % *n;
        FiniteGroup g = FiniteGroup::from_permutations(name, {c});
        std::vector<std::string> labels;
        for (const auto& p : g.permutations())
            labels.push_back(std::to_string(p[0]));  // c^k sends 0 to k
        return g.with_labels(std::move(labels));
    }
    if (name == "S3")
        return FiniteGroup::from_permutations("S3", {{1, 0, 2}, {1, 2, 0}});
    if (name == "S4")
        return FiniteGroup::from_permutations("S4", {{1, 0, 2, 3}, {1, 2, 3, 0}});
    if (name == "D4")
        return FiniteGroup::from_permutations("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}});
    if (name == "Q8")
        return quaternion_group();
    if (name == "Z2xZ2") {
        FiniteGroup g = FiniteGroup::from_permutations("Z2xZ2", {{1, 0, 3, 2}, {2, 3, 0, 1}});
        // p[0] = a1 + 2*a2 for the element (a1, a2)
        std::vector<std::string> labels;
        for (const auto& p : g.permutations())
            labels.push_back("(" + std::to_string(p[0] % 2) + "," + std::to_string(p[0] / 2) + ")");
        return g.with_labels(std::move(labels));
    }
    throw GroupError("unknown catalog group '" + name + "'");
}

std::vector<std::string> catalog_names()
{
    return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "S3", "S4", "D4", "Q8", "Z2xZ2"};
}

}  // namespace orbistring
