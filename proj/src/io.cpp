#include "orbistring/io.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace orbistring {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void schema(const std::string& what) { throw IoError("schema: " + what); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        schema(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_number_integer())
        schema(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<std::vector<int>> int_table(const json& j, const char* key)
{
    try {
        return field(j, key).get<std::vector<std::vector<int>>>();
    } catch (const json::exception&) {
        schema(std::string("\"") + key + "\" must be a table of integers");
    }
}

std::optional<fs::path> catalog_file(const std::string& stem)
{
    const char* dir = std::getenv("ORBISTRING_CATALOG");
    if (!dir || !*dir)
        return std::nullopt;
    fs::path p = fs::path(dir) / (stem + ".json");
    if (fs::exists(p))
        return p;
    return std::nullopt;
}

json element_to_json(const FiniteGroup& G, Element g) { return G.label(g); }

json elements_to_json(const FiniteGroup& G, const std::vector<Element>& v)
{
    json out = json::array();
    for (Element g : v)
        out.push_back(element_to_json(G, g));
    return out;
}

std::vector<Element> elements_from_json(const FiniteGroup& G, const json& j)
{
    if (!j.is_array())
        schema("expected a list of group elements");
    std::vector<Element> out;
    for (const auto& e : j)
        out.push_back(element_from_json(G, e));
    return out;
}

FiniteGroup group_ref(const json& j)
{
    if (j.is_string())
        return load_group(j.get<std::string>());
    return group_from_json(j);
}

json rationals_to_json(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& r : v)
        out.push_back(rational_to_json(r));
    return out;
}

std::vector<Rational> rationals_from_json(const json& j)
{
    if (!j.is_array())
        schema("expected a list of rationals");
    std::vector<Rational> out;
    for (const auto& e : j)
        out.push_back(rational_from_json(e));
    return out;
}

json labels_to_json(const std::vector<int>& labels)
{
    json out = json::array();
    for (int l : labels)
        out.push_back(l + 1);
    return out;
}

std::vector<int> labels_from_json(const json& j)
{
    std::vector<int> out;
    try {
        out = j.get<std::vector<int>>();
    } catch (const json::exception&) {
        schema("\"interval_labels\" must be a list of integers");
    }
    for (int& l : out)
        --l;
    return out;
}

json clusters_to_json(const std::vector<Rational>& vertices, const std::vector<int>& cluster)
{
    int count = 0;
    for (int c : cluster)
        count = std::max(count, c + 1);
    json out = json::array();
    for (int c = 0; c < count; ++c) {
        json one = json::array();
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (cluster[v] == c)
                one.push_back(rational_to_json(vertices[v]));
        out.push_back(one);
    }
    return out;
}

json vector_to_json(const Vec& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(x.to_string());
    return out;
}

Vec vector_from_json(const json& j, int level, std::size_t dim, const char* what)
{
    if (!j.is_array() || j.size() != dim)
        schema(std::string("\"") + what + "\" must have one entry per basis element");
    Vec out;
    for (const auto& e : j) {
        if (!e.is_string() && !e.is_number())
            schema(std::string("entries of \"") + what + "\" must be strings or numbers");
        out.push_back(e.is_string() ? parse_cyclo(e.get<std::string>(), level)
                                    : parse_cyclo(e.dump(), level));
    }
    return out;
}

std::string cyclo_text(const json& e)
{
    if (e.is_string())
        return e.get<std::string>();
    if (e.is_number_integer())
        return e.dump();
    schema("coefficients must be strings or integers");
}

}  // namespace

json read_json(const std::string& arg)
{
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in)
            throw IoError("cannot read " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("malformed JSON: ") + e.what());
    }
}

json rational_to_json(const Rational& r)
{
    if (r.get_num().fits_slong_p() && r.get_den().fits_slong_p())
        return json::array({r.get_num().get_si(), r.get_den().get_si()});
    return r.get_str();
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            schema("bad rational \"" + j.get<std::string>() + "\"");
        }
    }
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        const long den = j[1].get<long>();
        if (den == 0)
            schema("zero denominator");
        return make_rational(j[0].get<long>(), den);
    }
    schema("a rational is [num, den] or \"num/den\", got " + j.dump());
}

CycloNumber parse_cyclo(const std::string& text, int level)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw IoError("empty cyclotomic coefficient");
    std::vector<Rational> coeffs(1, Rational(0));
    std::size_t pos = 0;
    auto bad = [&]() -> IoError { return IoError("bad cyclotomic coefficient \"" + text + "\""); };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw bad();
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty())
            throw bad();
        Rational c = 1;
        std::size_t power = 0;
        const auto z = term.find('z');
        std::string num = term;
        if (z != std::string::npos) {
            num = term.substr(0, z);
            if (!num.empty()) {
                if (num.back() != '*')
                    throw bad();
                num.pop_back();
            }
            std::string rest = term.substr(z + 1);
            if (rest.empty())
                power = 1;
            else if (rest[0] == '^' && rest.size() > 1 &&
                     std::all_of(rest.begin() + 1, rest.end(), [](char ch) { return std::isdigit(ch); }))
                power = std::stoul(rest.substr(1));
            else
                throw bad();
        }
        if (!num.empty()) {
            try {
                c = parse_rational(num);
            } catch (const std::invalid_argument&) {
                throw bad();
            }
        }
        if (coeffs.size() <= power)
            coeffs.resize(power + 1, Rational(0));
        coeffs[power] += sign * c;
    }
    return CycloNumber::from_polynomial(level, std::move(coeffs));
}

json group_to_json(const FiniteGroup& G)
{
    json out{{"name", G.name()}, {"order", G.order()}, {"mult", G.table()}, {"labels", G.labels()}};
    return out;
}

FiniteGroup group_from_json(const json& j)
{
    if (!j.is_object())
        schema("a group is an object or a catalog name");
    const std::string name = j.value("name", std::string("G"));
    if (j.contains("perm_gens")) {
        std::vector<std::vector<int>> gens = int_table(j, "perm_gens");
        if (gens.empty())
            return FiniteGroup().renamed(name);
        return FiniteGroup::from_permutations(name, gens);
    }
    auto mult = int_table(j, "mult");
    if (j.contains("order") && int_field(j, "order") != static_cast<int>(mult.size()))
        schema("\"order\" does not match the table");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        try {
            labels = j.at("labels").get<std::vector<std::string>>();
        } catch (const json::exception&) {
            schema("\"labels\" must be a list of strings");
        }
    }
    return FiniteGroup::from_table(name, mult, labels);
}

FiniteGroup load_group(const std::string& ref)
{
    if (auto p = catalog_file(ref))
        return group_from_json(read_json(p->string()));
    if (is_catalog_group(ref))
        return catalog_group(ref);
    if (fs::exists(ref) || (!ref.empty() && ref[0] == '{'))
        return group_from_json(read_json(ref));
    throw IoError("unknown group '" + ref + "'");
}

Element element_from_json(const FiniteGroup& G, const json& j)
{
    if (j.is_number_integer()) {
        const int g = j.get<int>();
        if (!G.contains(g))
            throw GroupError("element index " + std::to_string(g) + " out of range");
        return g;
    }
    if (j.is_string())
        return G.parse_element(j.get<std::string>());
    schema("a group element is a label or an index, got " + j.dump());
}

json gset_to_json(const GSet& X)
{
    return json{{"group", group_to_json(X.group())}, {"size", X.size()}, {"act", X.table()}};
}

GSet gset_from_json(const json& j)
{
    FiniteGroup G = group_ref(field(j, "group"));
    if (j.value("point", false))
        return GSet::point(G);
    if (j.value("regular", false))
        return GSet::regular(G);
    if (j.contains("cosets"))
        return GSet::cosets(G, generated_subgroup(G, elements_from_json(G, j.at("cosets"))));
    auto act = int_table(j, "act");
    if (j.contains("size") && int_field(j, "size") != static_cast<int>(act.size()))
        schema("\"size\" does not match the action table");
    return GSet::from_table(G, act);
}

json cocycle_to_json(const TwoCocycle& alpha)
{
    const FiniteGroup& G = alpha.group();
    const int N = alpha.level();
    std::vector<std::vector<long>> num(G.order(), std::vector<long>(G.order()));
    for (Element g = 0; g < G.order(); ++g)
        for (Element h = 0; h < G.order(); ++h) {
            Rational v = alpha(g, h).q() * N;
            num[g][h] = v.get_num().get_si();
        }
    return json{{"group", group_to_json(G)}, {"denominator", N}, {"num", num}};
}

TwoCocycle cocycle_from_json(const json& j)
{
    FiniteGroup G = group_ref(field(j, "group"));
    const int N = int_field(j, "denominator");
    if (N < 1)
        schema("\"denominator\" must be positive");
    const auto num = int_table(j, "num");
    if (static_cast<int>(num.size()) != G.order())
        schema("\"num\" must be an order x order table");
    PhaseTable t(G.order(), std::vector<Phase>(G.order()));
    for (Element g = 0; g < G.order(); ++g) {
        if (static_cast<int>(num[g].size()) != G.order())
            schema("\"num\" must be an order x order table");
        for (Element h = 0; h < G.order(); ++h)
            t[g][h] = Phase::from_fraction(num[g][h], N);
    }
    return TwoCocycle::from_table(G, t);
}

TwoCocycle load_cocycle(const FiniteGroup& G, const std::string& ref)
{
    if (auto p = catalog_file(G.name() + "-" + ref)) {
        TwoCocycle out = cocycle_from_json(read_json(p->string()));
        if (!(out.group() == G))
            throw IoError("catalog cocycle " + p->string() + " is over a different group");
        return out;
    }
    const auto names = catalog_cocycle_names(G);
    if (std::find(names.begin(), names.end(), ref) != names.end())
        return catalog_cocycle(G, ref);
    if (!fs::exists(ref) && ref.find('{') == std::string::npos)
        throw IoError("unknown cocycle '" + ref + "' for group " + G.name());
    TwoCocycle out = cocycle_from_json(read_json(ref));
    if (!(out.group() == G))
        throw IoError("cocycle is over a different group");
    return out;
}

json torsion_to_json(const TorsionCocycle& tau)
{
    const FiniteGroup& G = tau.group();
    json q = json::array();
    for (Element g = 0; g < G.order(); ++g) {
        json row = json::array();
        for (Element h = 0; h < G.order(); ++h)
            row.push_back(tau(g, h).to_string());
        q.push_back(row);
    }
    return json{{"group", G.name()}, {"labels", G.labels()}, {"tau", q}};
}

json ring_to_json(const SectorRing& R)
{
    json structure = json::array();
    for (int i = 0; i < R.dim(); ++i)
        for (int j = 0; j < R.dim(); ++j)
            for (int k = 0; k < R.dim(); ++k)
                if (!R.c(i, j, k).is_zero())
                    structure.push_back(json::array({i, j, k, R.c(i, j, k).to_string()}));
    json out{{"basis", R.basis()}, {"level", R.level()}, {"structure", structure}, {"unit", vector_to_json(R.unit())}};
    if (R.trace())
        out["trace"] = vector_to_json(*R.trace());
    return out;
}

SectorRing ring_from_json(const json& j)
{
    std::vector<std::string> basis;
    try {
        basis = field(j, "basis").get<std::vector<std::string>>();
    } catch (const json::exception&) {
        schema("\"basis\" must be a list of strings");
    }
    const int level = j.contains("level") ? int_field(j, "level") : 1;
    if (level < 1)
        schema("\"level\" must be positive");
    SectorRing R(basis, level);
    const int n = R.dim();
    for (const auto& t : field(j, "structure")) {
        if (!t.is_array() || t.size() != 4)
            schema("structure entries are [i, j, k, coeff]");
        int idx[3];
        for (int a = 0; a < 3; ++a) {
            if (!t[a].is_number_integer() || t[a].get<int>() < 0 || t[a].get<int>() >= n)
                schema("structure index out of range in " + t.dump());
            idx[a] = t[a].get<int>();
        }
        R.set_c(idx[0], idx[1], idx[2], parse_cyclo(cyclo_text(t[3]), level));
    }
    R.set_unit(vector_from_json(field(j, "unit"), level, n, "unit"));
    if (j.contains("trace"))
        R.set_trace(vector_from_json(j.at("trace"), level, n, "trace"));
    return R;
}

json classes_to_json(const FiniteGroup& G, const ConjugacyData& c)
{
    json out = json::array();
    for (std::size_t i = 0; i < c.classes.size(); ++i)
        out.push_back(json{{"rep", G.label(c.reps[i])},
                           {"size", c.classes[i].size()},
                           {"elements", elements_to_json(G, c.classes[i])},
                           {"centralizer", elements_to_json(G, c.centralizers[i])}});
    return json{{"group", G.name()}, {"classes", out}};
}

json diagram_to_json(const ChordDiagram& c)
{
    json chords = json::array();
    for (const auto& ch : c.chords()) {
        json x = rational_to_json(ch.x), y = rational_to_json(ch.y);
        if (x.is_array() && y.is_array())
            chords.push_back(json::array({x[0], x[1], y[0], y[1]}));
        else
            chords.push_back(json::array({ch.x.get_str(), ch.y.get_str()}));
    }
    return json{{"n", c.n()},
                {"chords", chords},
                {"marks", rationals_to_json(c.marks())},
                {"interval_labels", labels_to_json(c.interval_labels())}};
}

DiagramData diagram_data_from_json(const json& j)
{
    DiagramData d;
    d.n = int_field(j, "n");
    if (d.n < 1)
        schema("\"n\" must be positive");
    const json& chords = field(j, "chords");
    if (!chords.is_array())
        schema("\"chords\" must be a list");
    for (const auto& ch : chords) {
        if (ch.is_array() && ch.size() == 4)
            d.chords.push_back({rational_from_json(json::array({ch[0], ch[1]})),
                                rational_from_json(json::array({ch[2], ch[3]}))});
        else if (ch.is_array() && ch.size() == 2)
            d.chords.push_back({rational_from_json(ch[0]), rational_from_json(ch[1])});
        else
            schema("a chord is [xnum, xden, ynum, yden]");
    }
    d.marks = rationals_from_json(field(j, "marks"));
    if (j.contains("interval_labels"))
        d.interval_labels = labels_from_json(j.at("interval_labels"));
    return d;
}

ChordDiagram diagram_from_json(const json& j) { return ChordDiagram::validate(diagram_data_from_json(j)); }

json class_to_json(const MDClass& d)
{
    json out = diagram_to_json(representative(d));
    out["clusters"] = clusters_to_json(d.vertices, d.cluster);
    out["interval_labels"] = labels_to_json(d.interval_labels);
    // u = 0 on a cluster vertex: the base lobe follows the orientation
    out["base_on_vertex"] = !d.vertices.empty() && d.vertices.front() == 0;
    return out;
}

MDClass class_from_json(const json& j)
{
    if (!j.contains("clusters"))
        return canonical_md(diagram_from_json(j));
    MDClass d;
    d.n = int_field(j, "n");
    std::vector<std::pair<Rational, int>> verts;
    const json& clusters = j.at("clusters");
    if (!clusters.is_array())
        schema("\"clusters\" must be a list");
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (const auto& p : rationals_from_json(clusters[c])) {
            if (p < 0 || p >= 1)
                throw ChordError("vertex " + p.get_str() + " is outside [0,1)");
            verts.emplace_back(p, static_cast<int>(c));
        }
    std::sort(verts.begin(), verts.end());
    // renumber clusters by least vertex
    std::map<int, int> renum;
    for (const auto& [p, c] : verts) {
        renum.emplace(c, static_cast<int>(renum.size()));
        d.vertices.push_back(p);
    }
    for (std::size_t v = 1; v < d.vertices.size(); ++v)
        if (d.vertices[v] == d.vertices[v - 1])
            throw ChordError("vertex " + d.vertices[v].get_str() + " is listed twice");
    for (const auto& [p, c] : verts)
        d.cluster.push_back(renum.at(c));
    d.interval_labels = labels_from_json(field(j, "interval_labels"));
    d.marks = rationals_from_json(field(j, "marks"));
    if (static_cast<int>(d.marks.size()) != d.n)
        throw ChordError("expected " + std::to_string(d.n) + " marks");
    const std::size_t intervals = d.vertices.empty() ? 1 : d.vertices.size();
    if (d.interval_labels.size() != intervals)
        throw ChordError("expected one label per interval");
    MDClass back = canonical_md(representative(d));
    if (back != d)
        throw ChordError("class data is not in canonical form or is inconsistent");
    return d;
}

json cactus_to_json(const Cactus& k)
{
    json points = json::array();
    for (const auto& pt : k.points) {
        json one = json::array();
        for (const auto& inc : pt)
            one.push_back(json::array({inc.lobe + 1, rational_to_json(inc.coord)}));
        points.push_back(one);
    }
    return json{{"n", k.n},
                {"perimeters", rationals_to_json(k.perimeters)},
                {"points", points},
                {"base", json::array({k.base_lobe + 1, rational_to_json(k.base_coord)})},
                {"base_on_vertex", k.base_on_vertex},
                {"base_at_mark", k.base_at_mark}};
}

Cactus cactus_from_json(const json& j)
{
    Cactus k;
    k.n = int_field(j, "n");
    k.perimeters = rationals_from_json(field(j, "perimeters"));
    auto incidence = [](const json& e) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer())
            schema("an incidence is [lobe, coordinate]");
        return Incidence{e[0].get<int>() - 1, rational_from_json(e[1])};
    };
    const json& points = field(j, "points");
    if (!points.is_array())
        schema("\"points\" must be a list");
    for (const auto& pt : points) {
        if (!pt.is_array())
            schema("each point is a list of incidences");
        std::vector<Incidence> one;
        for (const auto& e : pt)
            one.push_back(incidence(e));
        k.points.push_back(one);
    }
    Incidence base = incidence(field(j, "base"));
    k.base_lobe = base.lobe;
    k.base_coord = base.coord;
    return validate_cactus(k);
}

json gdiagram_to_json(const GDiagram& w)
{
    json out = diagram_to_json(w.base);
    out["group"] = w.group.name();
    out["outer"] = element_to_json(w.group, w.outer);
    out["delta"] = elements_to_json(w.group, w.delta);
    out["lifts"] = elements_to_json(w.group, w.lifts);
    return out;
}

GDiagram gdiagram_from_json(const json& j)
{
    FiniteGroup G = group_ref(field(j, "group"));
    ChordDiagram base = diagram_from_json(j);
    const Element outer = element_from_json(G, field(j, "outer"));
    auto delta = elements_from_json(G, field(j, "delta"));
    auto lifts = elements_from_json(G, field(j, "lifts"));
    return make_gdiagram(G, base, outer, delta, lifts);
}

json gclass_to_json(const FiniteGroup& G, const GMDClass& w)
{
    json out = gdiagram_to_json(representative(G, w));
    out["clusters"] = clusters_to_json(w.base.vertices, w.base.cluster);
    out["interval_labels"] = labels_to_json(w.base.interval_labels);
    out["transport"] = elements_to_json(G, w.transport);
    out["base_on_vertex"] = !w.base.vertices.empty() && w.base.vertices.front() == 0;
    return out;
}

GMDClass gclass_from_json(const json& j, FiniteGroup* group_out)
{
    GDiagram w = gdiagram_from_json(j);
    GMDClass out = canonical_gmd(w);
    if (j.contains("transport") && elements_from_json(w.group, j.at("transport")) != out.transport)
        throw GChordError("\"transport\" does not match the chords");
    if (group_out)
        *group_out = w.group;
    return out;
}

json algebra_to_json(const GradedAlgebra& A)
{
    json gens = json::array();
    for (const auto& g : A.generators()) {
        json one{{"name", g.name}, {"degree", g.degree}};
        if (g.root_order > 0)
            one["root_order"] = g.root_order;
        gens.push_back(one);
    }
    json zero = json::array();
    for (const auto& m : A.annihilators())
        zero.push_back(A.to_string(m));
    return json{{"name", A.name()}, {"generators", gens}, {"annihilators", zero}};
}

GradedAlgebra algebra_from_json(const json& j)
{
    if (j.is_object() && j.contains("lens")) {
        const json& l = j.at("lens");
        if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
            schema("\"lens\" is [n, p]");
        return lens_ring(l[0].get<int>(), l[1].get<int>());
    }
    if (j.is_object() && j.contains("sphere")) {
        if (!j.at("sphere").is_number_integer())
            schema("\"sphere\" is p");
        return sphere_quotient_ring(j.at("sphere").get<int>());
    }
    std::vector<Generator> gens;
    const json& g = field(j, "generators");
    if (!g.is_array())
        schema("\"generators\" must be a list");
    for (const auto& e : g) {
        Generator one;
        if (!e.is_object() || !e.contains("name") || !e.at("name").is_string())
            schema("a generator is {\"name\", \"degree\", \"root_order\"}");
        one.name = e.at("name").get<std::string>();
        one.degree = int_field(e, "degree");
        one.root_order = e.contains("root_order") ? int_field(e, "root_order") : 0;
        gens.push_back(one);
    }
    const std::string name = j.value("name", std::string("A"));
    std::vector<Monomial> zero;
    if (j.contains("annihilators")) {
        GradedAlgebra free(name, gens);
        for (const auto& m : j.at("annihilators")) {
            if (!m.is_string())
                schema("annihilators are monomial strings");
            zero.push_back(free.parse_monomial(m.get<std::string>()));
        }
    }
    return GradedAlgebra(name, gens, zero);
}

json truncated_to_json(const TruncatedAlgebra& T)
{
    json basis = json::array();
    for (int i = 0; i < T.dim(); ++i)
        basis.push_back(json{{"name", T.names[i]}, {"degree", T.degree[i]}});
    json products = json::array();
    for (int i = 0; i < T.dim(); ++i)
        for (int j = 0; j < T.dim(); ++j) {
            if (!T.product[i][j])
                continue;
            bool zero = true;
            for (const auto& c : *T.product[i][j])
                zero = zero && c == 0;
            if (!zero)
                products.push_back(json::array({T.names[i], T.names[j], T.to_string(*T.product[i][j])}));
        }
    return json{{"name", T.name}, {"window", json::array({T.lo, T.hi})}, {"basis", basis}, {"products", products}};
}

json bv_to_json(const BVData& D, const json& algebra)
{
    json delta = json::array();
    for (int i = 0; i < D.algebra.dim(); ++i)
        for (int k = 0; k < D.algebra.dim(); ++k)
            if (D.delta[i][k] != 0)
                delta.push_back(json::array({i, k, D.delta[i][k].get_str()}));
    return json{{"algebra", algebra}, {"window", json::array({D.algebra.lo, D.algebra.hi})}, {"delta", delta}};
}

BVData bv_from_json(const json& j)
{
    const json& a = field(j, "algebra");
    BVData D;
    if (a.is_object() && a.contains("dw")) {
        D = zero_delta(truncate(dw_frobenius(group_ref(a.at("dw")))));
    } else {
        const json& w = field(j, "window");
        if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
            schema("\"window\" is [lo, hi]");
        D = zero_delta(truncate(algebra_from_json(a), w[0].get<int>(), w[1].get<int>()));
    }
    const int n = D.algebra.dim();
    const json& delta = j.contains("delta") ? j.at("delta") : json::array();
    if (!delta.is_array())
        schema("\"delta\" must be a list of [i, j, coeff]");
    for (const auto& t : delta) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
            schema("delta entries are [i, j, coeff]");
        const int i = t[0].get<int>(), k = t[1].get<int>();
        if (i < 0 || i >= n || k < 0 || k >= n)
            schema("delta index out of range in " + t.dump());
        D.delta[i][k] = rational_from_json(t[2]);
    }
    return D;
}

json bv_report_to_json(const BVReport& r)
{
    json out{{"pass", r.pass}, {"checked", r.checked}, {"skipped", r.skipped}};
    if (!r.pass) {
        out["axiom"] = r.axiom;
        out["witness"] = r.witness;
    }
    return out;
}

}  // namespace orbistring
