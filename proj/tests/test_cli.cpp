#include "cli_run.hpp"

#include <doctest.h>
#include <orbistring/io.hpp>

#include <set>

using namespace orbistring;

namespace {

const std::string data = std::string(ORBISTRING_SOURCE_DIR) + "/tests/data/";

json parsed(const CliResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("dw table for S3")
{
    auto r = run_cli("dw --group S3 --format table");
    REQUIRE(r.status == 0);
    std::istringstream in(r.out);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    // title, header, rule, three rows
    REQUIRE(lines.size() == 6);
    CHECK(lines[4].find("3*() + 3*(1,2,3)") != std::string::npos);

    auto j = parsed(run_cli("dw --group S3"));
    SectorRing R = ring_from_json(j);
    CHECK(R.dim() == 3);
    CHECK(R.frobenius_nondegenerate());
}

TEST_CASE("torsion on the Klein four group")
{
    auto j = parsed(run_cli("torsion --group Z2xZ2 --cocycle nontrivial"));
    std::set<std::string> values;
    for (const auto& row : j["tau"])
        for (const auto& v : row)
            values.insert(v.get<std::string>());
    CHECK(values == std::set<std::string>{"0", "1/2"});
    CHECK(j["regular"] == json::array({"(0,0)"}));
}

TEST_CASE("exit codes")
{
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("dw").status == 2);
    CHECK(run_cli("dw --group S3 --format yaml").status == 2);
    CHECK(run_cli("--help").status == 0);

    auto bad = run_cli("dw --group Q9");
    CHECK(bad.status == 1);
    auto err = json::parse(bad.err);
    CHECK(err["error"] == "input");

    auto unreadable = run_cli("validate --diagram /nonexistent.json");
    CHECK(unreadable.status == 1);
    CHECK(json::parse(unreadable.err)["error"] == "input");

    auto crossing = run_cli("validate --diagram '{\"n\": 3, \"chords\": [[0,1,1,2],[1,4,3,4]], \"marks\": [[1,8],[3,8],[5,8]]}'");
    CHECK(crossing.status == 1);
    CHECK(json::parse(crossing.err)["error"] == "diagram");
}

TEST_CASE("gcompose names the mismatched slot")
{
    auto r = run_cli("gcompose --base " + data + "figure.json --parts " + data + "z3_unit_ok.json " + data +
                     "z3_unit_ok.json");
    CHECK(r.status == 1);
    auto err = json::parse(r.err);
    CHECK(err["error"] == "decoration");
    CHECK(err["message"].get<std::string>().find("slot 1") != std::string::npos);

    // parts whose outer holonomy matches
    const std::string unit = "'{\"n\": 1, \"chords\": [], \"marks\": [[0, 1]], \"group\": \"Z3\", \"outer\": 2, "
                             "\"delta\": [], \"lifts\": [0]}'";
    auto ok = run_cli("gcompose --base " + data + "figure.json --parts " + unit + " " + unit);
    REQUIRE(ok.status == 0);
    auto j = parsed(ok);
    CHECK(j["ih"] == json::array({"2", "2"}));
    CHECK(j["oh"] == "1");
}

TEST_CASE("outputs reparse to the same objects")
{
    auto v = parsed(run_cli("validate --diagram " + data + "chord.json"));
    auto again = parsed(run_cli("validate --diagram '" + v["class"].dump() + "'"));
    CHECK(again["class"] == v["class"]);

    CHECK(v["class"]["base_on_vertex"] == false);

    auto k = parsed(run_cli("cactus --diagram " + data + "chord.json"));
    CHECK(k.contains("base_at_mark"));
    auto back = parsed(run_cli("uncactus --cactus '" + k.dump() + "'"));
    CHECK(back["class"] == v["class"]);

    auto comp = parsed(run_cli("compose --base " + data + "chord.json --parts " + data + "chord.json " + data +
                               "chord.json"));
    CHECK(comp["class"]["n"] == 4);
    auto by_class = parsed(run_cli("compose --base '" + v["class"].dump() + "' --parts '" + v["class"].dump() + "' '" +
                                   v["class"].dump() + "'"));
    CHECK(by_class["class"] == comp["class"]);

    auto ring = parsed(run_cli("ring --lens 3 2 --window -3 4"));
    CHECK(ring["presentation"]["name"] == "L(3,2)");
    auto ring2 = parsed(run_cli("ring --presentation '" + ring["presentation"].dump() + "' --window -3 4"));
    CHECK(ring2["truncation"] == ring["truncation"]);
}

TEST_CASE("sectors, Morita and BV from the command line")
{
    auto fixed = parsed(run_cli("string-ring --gset " + data + "z2_three_points.json --fixed 1"));
    CHECK(fixed["fixed_points"] == json::array({2}));
    auto m = parsed(run_cli("morita --x " + data + "s3_cosets.json --y '{\"group\": \"Z2\", \"point\": true}'"));
    CHECK(m["verdict"] == "isomorphic");
    auto bv = parsed(run_cli("bvcheck --delta " + data + "lens_bad_delta.json"));
    CHECK(bv["pass"] == false);
    CHECK(bv["axiom"] == "degree");
    auto zero = parsed(run_cli("bvcheck --delta '{\"algebra\": {\"dw\": \"S3\"}}'"));
    CHECK(zero["pass"] == true);
}

TEST_CASE("enumeration")
{
    auto j = parsed(run_cli("enumerate --diagram " + data + "chord.json --group S3 --outer '(1,3,2)' --inner '(2,3)' '(2,3)'"));
    CHECK(j["count"] == 12);
    CHECK(j["free_action"] == true);
    auto all = parsed(run_cli("enumerate --diagram " + data + "chord.json --group Z3 --outer 1"));
    CHECK(all["count"] == 27);
    CHECK(all["group_order_power"] == 27);
}

TEST_CASE("catalog override from the environment")
{
    const auto dir = std::filesystem::temp_directory_path() / "orbistring_cli_catalog";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "Odd.json") << R"({"name": "Odd", "perm_gens": [[1, 2, 0]]})";
    auto r = run_cli("classes --group Odd", "ORBISTRING_CATALOG='" + dir.string() + "'");
    std::filesystem::remove_all(dir);
    REQUIRE(r.status == 0);
    CHECK(parsed(r)["classes"].size() == 3);
}

TEST_CASE("repeated runs are byte identical")
{
    const std::string args = "enumerate --diagram " + data + "chord.json --group S3 --outer '()' --inner '()' '()'";
    CHECK(run_cli(args).out == run_cli(args).out);
    auto a = run_cli("selftest --only 3 7 --seed 7 --format markdown");
    auto b = run_cli("selftest --only 3 7 --seed 7 --format markdown");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("| 3 | PASS |") != std::string::npos);
}
