// orbistring: command-line front end. Every subcommand reads JSON (a path or
// inline text), runs one library operation and prints JSON, an aligned text
// table or markdown. Exit status: 0 ok, 1 domain error (JSON on stderr),
// 2 usage error.

#include <orbistring/checks.hpp>
#include <orbistring/io.hpp>

#include <CLI11.hpp>

#include <functional>
#include <future>
#include <iostream>
#include <sstream>

using namespace orbistring;

namespace {

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    json data;
    std::vector<Table> tables;
    int status = 0;
};

std::string render_text(const Table& t)
{
    std::vector<std::size_t> width(t.header.size(), 0);
    auto grow = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    };
    grow(t.header);
    for (const auto& row : t.rows)
        grow(row);
    std::ostringstream out;
    if (!t.title.empty())
        out << t.title << "\n";
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < width.size(); ++i) {
            std::string cell = i < row.size() ? row[i] : "";
            s += cell + std::string(width[i] - cell.size(), ' ');
            if (i + 1 < width.size())
                s += "  ";
        }
        while (!s.empty() && s.back() == ' ')
            s.pop_back();
        out << s << "\n";
    };
    line(t.header);
    std::vector<std::string> rule;
    for (auto w : width)
        rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& row : t.rows)
        line(row);
    return out.str();
}

std::string render_markdown(const Table& t)
{
    auto escape = [](std::string s) {
        std::string out;
        for (char c : s)
            out += c == '|' ? std::string("\\|") : std::string(1, c);
        return out;
    };
    std::ostringstream out;
    if (!t.title.empty())
        out << "### " << t.title << "\n\n";
    out << "|";
    for (const auto& h : t.header)
        out << " " << escape(h) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i)
        out << " --- |";
    out << "\n";
    for (const auto& row : t.rows) {
        out << "|";
        for (const auto& c : row)
            out << " " << escape(c) << " |";
        out << "\n";
    }
    return out.str();
}

// Top-level fields as a two-column table, for commands without a natural one.
Table field_table(const json& data)
{
    Table t{"", {"field", "value"}, {}};
    for (auto it = data.begin(); it != data.end(); ++it)
        t.rows.push_back({it.key(), it->is_string() ? it->get<std::string>() : it->dump()});
    return t;
}

std::string combination(const Vec& v, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        std::string c = v[k].to_string();
        const bool compound = c.find_first_of("+z", 1) != std::string::npos || c.find(" - ") != std::string::npos;
        std::string term = c == "1" ? names[k] : c == "-1" ? "-" + names[k] : compound ? "(" + c + ")*" + names[k]
                                                                                        : c + "*" + names[k];
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

Table ring_table(const SectorRing& R, const std::string& title)
{
    Table t{title + (R.level() > 1 ? " (z = exp(2 pi i/" + std::to_string(R.level()) + "))" : ""), {"*"}, {}};
    for (const auto& b : R.basis())
        t.header.push_back(b);
    for (int i = 0; i < R.dim(); ++i) {
        std::vector<std::string> row{R.basis()[i]};
        for (int j = 0; j < R.dim(); ++j)
            row.push_back(combination(R.multiply(R.basis_vector(i), R.basis_vector(j)), R.basis()));
        t.rows.push_back(row);
    }
    return t;
}

std::vector<std::string> labels(const FiniteGroup& G, const std::vector<Element>& v)
{
    std::vector<std::string> out;
    for (Element g : v)
        out.push_back(G.label(g));
    return out;
}

std::string joined(const std::vector<std::string>& v, const std::string& sep = " ")
{
    std::string out;
    for (const auto& s : v)
        out += (out.empty() ? "" : sep) + s;
    return out;
}

json matrix_to_json(const Matrix& m)
{
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row)
            r.push_back(x.to_string());
        out.push_back(r);
    }
    return out;
}

Table perimeter_table(const ChordDiagram& c)
{
    Table t{"regions", {"region", "mark", "perimeter"}, {}};
    for (int i = 0; i < c.n(); ++i)
        t.rows.push_back({std::to_string(i + 1), c.marks()[i].get_str(), c.perimeter(i).get_str()});
    return t;
}

// Regions of a class, read off its chain representative.
json region_perimeters(const ChordDiagram& c)
{
    json out = json::array();
    for (int i = 0; i < c.n(); ++i)
        out.push_back(rational_to_json(c.perimeter(i)));
    return out;
}

bool has_clusters(const json& j) { return j.is_object() && j.contains("clusters"); }

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"orbifold string topology for global quotients by finite groups", "orbistring"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::uint64_t seed = 42;
    app.add_option("--format", format, "json, table or markdown")
        ->check(CLI::IsMember({"json", "table", "markdown"}));
    app.add_option("--seed", seed, "seed for randomized property runs");

    std::function<Output()> action;
    auto command = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

    // shared option storage
    std::string group_ref, cocycle_ref = "trivial", gset_ref, x_ref, y_ref, diagram_ref, base_ref, cactus_ref,
                                         delta_ref, presentation_ref, fixed, outer;
    std::vector<std::string> conj, parts, inner;
    std::vector<int> lens, window{-4, 6}, only;
    int sphere = 0;
    long cap = 2'000'000;

    auto* group = command("group", "multiplication table; --conj Q H gives H^-1 Q H");
    group->add_option("--group", group_ref, "catalog name, file or inline JSON")->required();
    group->add_option("--conj", conj)->expected(2);
    group->callback([&] {
        action = [&] {
            FiniteGroup G = load_group(group_ref);
            Output out;
            if (!conj.empty()) {
                const Element q = G.parse_element(conj[0]), h = G.parse_element(conj[1]);
                out.data = json{{"q", G.label(q)}, {"h", G.label(h)}, {"result", G.label(bun_holonomy_action(G, q, h))}};
                return out;
            }
            out.data = group_to_json(G);
            Table t{G.name() + " (row then column)", {"*"}, {}};
            for (Element b = 0; b < G.order(); ++b)
                t.header.push_back(G.label(b));
            for (Element a = 0; a < G.order(); ++a) {
                std::vector<std::string> row{G.label(a)};
                for (Element b = 0; b < G.order(); ++b)
                    row.push_back(G.label(G.mul(a, b)));
                t.rows.push_back(row);
            }
            out.tables.push_back(t);
            return out;
        };
    });

    auto* classes = command("classes", "conjugacy classes and centralizers");
    classes->add_option("--group", group_ref)->required();
    classes->callback([&] {
        action = [&] {
            FiniteGroup G = load_group(group_ref);
            auto c = conjugacy_classes(G);
            Output out{classes_to_json(G, c), {}};
            Table t{G.name(), {"rep", "size", "elements", "|C(rep)|"}, {}};
            for (std::size_t i = 0; i < c.classes.size(); ++i)
                t.rows.push_back({G.label(c.reps[i]), std::to_string(c.classes[i].size()),
                                  joined(labels(G, c.classes[i])), std::to_string(c.centralizers[i].size())});
            out.tables.push_back(t);
            return out;
        };
    });

    auto* dw = command("dw", "Dijkgraaf-Witten algebra Z(Q[G])");
    dw->add_option("--group", group_ref)->required();
    dw->callback([&] {
        action = [&] {
            SectorRing R = dw_frobenius(load_group(group_ref));
            return Output{ring_to_json(R), {ring_table(R, "Z(Q[" + group_ref + "])")}};
        };
    });

    auto* torsion = command("torsion", "discrete torsion tau(g,h) = alpha(g,h)/alpha(h,h^-1 g h)");
    torsion->add_option("--group", group_ref)->required();
    torsion->add_option("--cocycle", cocycle_ref, "catalog name, file or inline JSON");
    torsion->callback([&] {
        action = [&] {
            FiniteGroup G = load_group(group_ref);
            TwoCocycle alpha = load_cocycle(G, cocycle_ref);
            TorsionCocycle tau = discrete_torsion(alpha);
            Output out{torsion_to_json(tau), {}};
            out.data["regular"] = labels(G, alpha_regular_classes(alpha));
            Table t{"tau(g,h) as q in exp(2 pi i q), g down, h across", {"g \\ h"}, {}};
            for (Element h = 0; h < G.order(); ++h)
                t.header.push_back(G.label(h));
            for (Element g = 0; g < G.order(); ++g) {
                std::vector<std::string> row{G.label(g)};
                for (Element h = 0; h < G.order(); ++h)
                    row.push_back(tau(g, h).to_string());
                t.rows.push_back(row);
            }
            out.tables.push_back(t);
            return out;
        };
    });

    auto* twisted = command("twisted-center", "centre of the twisted group algebra");
    twisted->add_option("--group", group_ref)->required();
    twisted->add_option("--cocycle", cocycle_ref);
    twisted->callback([&] {
        action = [&] {
            FiniteGroup G = load_group(group_ref);
            SectorRing R = twisted_center(load_cocycle(G, cocycle_ref));
            return Output{ring_to_json(R), {ring_table(R, "twisted centre")}};
        };
    });

    auto* string_ring = command("string-ring", "orbifold string ring of a finite G-set; --fixed g lists Fix(g)");
    string_ring->add_option("--gset", gset_ref, "file or inline JSON")->required();
    string_ring->add_option("--fixed", fixed);
    string_ring->callback([&] {
        action = [&] {
            GSet X = gset_from_json(read_json(gset_ref));
            if (!fixed.empty()) {
                const Element g = X.group().parse_element(fixed);
                return Output{json{{"g", X.group().label(g)}, {"fixed_points", fixed_points(X, g)}}, {}};
            }
            SectorRing R = orbifold_string_ring(X);
            return Output{ring_to_json(R), {ring_table(R, "string ring")}};
        };
    });

    auto* morita = command("morita", "compare the string rings of two G-sets");
    morita->add_option("--x", x_ref)->required();
    morita->add_option("--y", y_ref)->required();
    morita->callback([&] {
        action = [&] {
            auto rep = morita_compare(gset_from_json(read_json(x_ref)), gset_from_json(read_json(y_ref)));
            json data{{"verdict", to_string(rep.verdict)}, {"method", rep.method}, {"reason", rep.reason},
                      {"dim_x", rep.dim_x}, {"dim_y", rep.dim_y}, {"ring_x", ring_to_json(rep.ring_x)},
                      {"ring_y", ring_to_json(rep.ring_y)}};
            if (rep.witness)
                data["witness"] = matrix_to_json(*rep.witness);
            Table t{"", {"verdict", "method", "dim x", "dim y", "reason"},
                    {{to_string(rep.verdict), rep.method, std::to_string(rep.dim_x), std::to_string(rep.dim_y), rep.reason}}};
            return Output{data, {t}};
        };
    });

    auto* validate = command("validate", "validate a marked chord diagram and print its class");
    validate->add_option("--diagram", diagram_ref)->required();
    validate->callback([&] {
        action = [&] {
            json j = read_json(diagram_ref);
            MDClass d = class_from_json(j);
            ChordDiagram c = has_clusters(j) ? representative(d) : diagram_from_json(j);
            json data{{"class", class_to_json(d)}, {"perimeters", region_perimeters(c)}};
            return Output{data, {perimeter_table(c)}};
        };
    });

    auto* compose_cmd = command("compose", "operad composition c o (p_1, ..., p_n)");
    compose_cmd->add_option("--base", base_ref)->required();
    compose_cmd->add_option("--parts", parts)->required();
    compose_cmd->callback([&] {
        action = [&] {
            json jb = read_json(base_ref);
            std::vector<json> jp;
            bool labeled = !has_clusters(jb);
            for (const auto& p : parts) {
                jp.push_back(read_json(p));
                labeled = labeled && !has_clusters(jp.back());
            }
            Output out;
            if (labeled) {
                std::vector<ChordDiagram> ps;
                for (const auto& j : jp)
                    ps.push_back(diagram_from_json(j));
                ChordDiagram c = compose(diagram_from_json(jb), ps);
                out.data = json{{"diagram", diagram_to_json(c)}, {"class", class_to_json(canonical_md(c))},
                                {"perimeters", region_perimeters(c)}};
                out.tables.push_back(perimeter_table(c));
            } else {
                std::vector<MDClass> ps;
                for (const auto& j : jp)
                    ps.push_back(class_from_json(j));
                MDClass d = compose(class_from_json(jb), ps);
                ChordDiagram c = representative(d);
                out.data = json{{"class", class_to_json(d)}, {"perimeters", region_perimeters(c)}};
                out.tables.push_back(perimeter_table(c));
            }
            return out;
        };
    });

    auto* cactus = command("cactus", "the cactus of a marked chord diagram class");
    cactus->add_option("--diagram", diagram_ref)->required();
    cactus->callback([&] {
        action = [&] {
            Cactus k = to_cactus(class_from_json(read_json(diagram_ref)));
            Output out{cactus_to_json(k), {}};
            Table t{"lobes", {"lobe", "perimeter"}, {}};
            for (int i = 0; i < k.n; ++i)
                t.rows.push_back({std::to_string(i + 1), k.perimeters[i].get_str()});
            Table p{"intersection points (ccw)", {"point", "lobe@coordinate"}, {}};
            for (std::size_t i = 0; i < k.points.size(); ++i) {
                std::vector<std::string> inc;
                for (const auto& x : k.points[i])
                    inc.push_back(std::to_string(x.lobe + 1) + "@" + x.coord.get_str());
                p.rows.push_back({std::to_string(i + 1), joined(inc)});
            }
            out.tables = {t, p};
            return out;
        };
    });

    auto* uncactus = command("uncactus", "the marked chord diagram class of a cactus");
    uncactus->add_option("--cactus", cactus_ref)->required();
    uncactus->callback([&] {
        action = [&] {
            MDClass d = from_cactus(cactus_from_json(read_json(cactus_ref)));
            ChordDiagram c = representative(d);
            return Output{json{{"class", class_to_json(d)}, {"perimeters", region_perimeters(c)}}, {perimeter_table(c)}};
        };
    });

    auto* ih = command("ih", "incoming holonomy of a decorated diagram");
    ih->add_option("--diagram", diagram_ref)->required();
    ih->callback([&] {
        action = [&] {
            GDiagram w = gdiagram_from_json(read_json(diagram_ref));
            auto h = labels(w.group, incoming_holonomy(w));
            Table t{"", {"region", "holonomy"}, {}};
            for (std::size_t i = 0; i < h.size(); ++i)
                t.rows.push_back({std::to_string(i + 1), h[i]});
            return Output{json{{"ih", h}}, {t}};
        };
    });

    auto* oh = command("oh", "outgoing holonomy of a decorated diagram");
    oh->add_option("--diagram", diagram_ref)->required();
    oh->callback([&] {
        action = [&] {
            GDiagram w = gdiagram_from_json(read_json(diagram_ref));
            return Output{json{{"oh", w.group.label(outgoing_holonomy(w))}}, {}};
        };
    });

    auto* gcompose = command("gcompose", "G-graded composition; ih of the base must match oh of the parts");
    gcompose->add_option("--base", base_ref)->required();
    gcompose->add_option("--parts", parts)->required();
    gcompose->callback([&] {
        action = [&] {
            GDiagram w = gdiagram_from_json(read_json(base_ref));
            std::vector<GDiagram> ps;
            for (const auto& p : parts)
                ps.push_back(gdiagram_from_json(read_json(p)));
            GDiagram c = g_compose(w, ps);
            json data{{"diagram", gdiagram_to_json(c)},
                      {"class", gclass_to_json(c.group, canonical_gmd(c))},
                      {"ih", labels(c.group, incoming_holonomy(c))},
                      {"oh", c.group.label(outgoing_holonomy(c))}};
            return Output{data, {}};
        };
    });

    auto* enumerate = command("enumerate", "decorations over a diagram with given holonomies");
    enumerate->add_option("--diagram", diagram_ref)->required();
    enumerate->add_option("--group", group_ref)->required();
    enumerate->add_option("--outer", outer)->required();
    enumerate->add_option("--inner", inner, "one element per region; omit to count the whole fiber");
    enumerate->add_option("--cap", cap, "largest search space allowed");
    enumerate->callback([&] {
        action = [&] {
            FiniteGroup G = load_group(group_ref);
            MDClass d = class_from_json(read_json(diagram_ref));
            const Element g = G.parse_element(outer);
            if (inner.empty()) {
                long expect = 1;
                for (int i = 0; i < 2 * d.n - 1; ++i)
                    expect *= G.order();
                const long count = decoration_count(G, d, g, cap);
                json data{{"count", count}, {"group_order_power", expect}};
                return Output{data, {}};
            }
            std::vector<Element> h;
            for (const auto& s : inner)
                h.push_back(G.parse_element(s));
            auto rep = enumerate_gmd(G, d, g, h, cap);
            json cls = json::array();
            for (const auto& w : rep.classes)
                cls.push_back(gclass_to_json(G, w));
            json data{{"count", rep.classes.size()}, {"searched", rep.searched}, {"orbits", rep.orbits},
                      {"free_action", rep.free_action}, {"classes", cls}};
            Table t{"", {"#", "transport", "lifts"}, {}};
            for (std::size_t i = 0; i < rep.classes.size(); ++i)
                t.rows.push_back({std::to_string(i + 1), joined(labels(G, rep.classes[i].transport)),
                                  joined(labels(G, rep.classes[i].lifts))});
            return Output{data, {t}};
        };
    });

    auto* ring = command("ring", "graded ring presentation and its products over a degree window");
    auto* lens_opt = ring->add_option("--lens", lens, "n p")->expected(2);
    auto* sphere_opt = ring->add_option("--sphere", sphere, "p");
    auto* pres_opt = ring->add_option("--presentation", presentation_ref, "file or inline JSON");
    lens_opt->excludes(sphere_opt)->excludes(pres_opt);
    sphere_opt->excludes(pres_opt);
    ring->add_option("--window", window, "lo hi")->expected(2);
    ring->callback([&] {
        action = [&] {
            json spec;
            if (!lens.empty())
                spec = json{{"lens", lens}};
            else if (*sphere_opt)
                spec = json{{"sphere", sphere}};
            else if (!presentation_ref.empty())
                spec = read_json(presentation_ref);
            else
                throw CLI::ValidationError("ring", "give --lens, --sphere or --presentation");
            GradedAlgebra A = algebra_from_json(spec);
            TruncatedAlgebra T = truncate(A, window[0], window[1]);
            Output out{json{{"presentation", algebra_to_json(A)}, {"truncation", truncated_to_json(T)}}, {}};
            Table t{A.name() + " in degrees " + std::to_string(T.lo) + ".." + std::to_string(T.hi), {"*"}, {}};
            for (int j = 0; j < T.dim(); ++j)
                t.header.push_back(T.names[j]);
            for (int i = 0; i < T.dim(); ++i) {
                std::vector<std::string> row{T.names[i] + " [" + std::to_string(T.degree[i]) + "]"};
                for (int j = 0; j < T.dim(); ++j)
                    row.push_back(T.product[i][j] ? T.to_string(*T.product[i][j]) : ".");
                t.rows.push_back(row);
            }
            out.tables.push_back(t);
            return out;
        };
    });

    auto* bvcheck = command("bvcheck", "check the BV axioms for a sparse delta over a window basis");
    bvcheck->add_option("--delta", delta_ref, "file or inline JSON")->required();
    bvcheck->callback([&] {
        action = [&] {
            BVData D = bv_from_json(read_json(delta_ref));
            BVReport r = bv_check(D);
            json data = bv_report_to_json(r);
            data["dim"] = D.algebra.dim();
            Table t{"", {"verdict", "axiom", "witness", "checked", "skipped"},
                    {{r.pass ? "pass" : "fail", r.pass ? "" : r.axiom, r.witness, std::to_string(r.checked),
                      std::to_string(r.skipped)}}};
            return Output{data, {t}};
        };
    });

    auto* selftest = command("selftest", "run the acceptance property suite");
    selftest->add_option("--only", only, "criterion numbers");
    selftest->callback([&] {
        action = [&] {
            std::vector<int> ids = only.empty() ? criterion_ids() : only;
            std::vector<std::future<CheckResult>> jobs;
            for (int id : ids)
                jobs.push_back(std::async(std::launch::async, run_criterion, id, seed));
            json results = json::array();
            Table t{"selftest, seed " + std::to_string(seed), {"criterion", "result", "title", "detail"}, {}};
            int passed = 0;
            bool clean = true;
            for (auto& job : jobs) {
                CheckResult r = job.get();
                passed += r.pass;
                clean = clean && (r.pass || r.analysed);
                results.push_back(json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"analysed", r.analysed},
                                       {"detail", r.detail}});
                t.rows.push_back({std::to_string(r.id), r.pass ? "PASS" : r.analysed ? "FAIL (analysed)" : "FAIL",
                                  r.title, r.detail});
            }
            Output out{json{{"seed", seed}, {"passed", passed}, {"total", ids.size()}, {"results", results}}, {t}};
            out.status = clean ? 0 : 1;
            return out;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    try {
        out = action();
    } catch (const CLI::Error& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::string kind = "domain";
        if (dynamic_cast<const IoError*>(&e))
            kind = "input";
        else if (dynamic_cast<const GroupError*>(&e))
            kind = "group";
        else if (dynamic_cast<const CocycleError*>(&e))
            kind = "cocycle";
        else if (dynamic_cast<const SectorError*>(&e))
            kind = "sector";
        else if (dynamic_cast<const GChordError*>(&e))
            kind = "decoration";
        else if (dynamic_cast<const ChordError*>(&e))
            kind = "diagram";
        else if (dynamic_cast<const GradedError*>(&e))
            kind = "graded";
        std::cerr << json{{"error", kind}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }

    if (format == "json") {
        std::cout << out.data.dump(2) << "\n";
    } else {
        if (out.tables.empty())
            out.tables.push_back(field_table(out.data));
        for (std::size_t i = 0; i < out.tables.size(); ++i) {
            if (i)
                std::cout << "\n";
            std::cout << (format == "table" ? render_text(out.tables[i]) : render_markdown(out.tables[i]));
        }
    }
    if (out.status != 0)
        std::cerr << json{{"error", "selftest"}, {"message", "some criteria failed"}}.dump() << "\n";
    return out.status;
}
