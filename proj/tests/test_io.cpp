#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kdiff/io.hpp"
#include "kdiff/verify.hpp"

using namespace kdiff;

namespace {

Ring qp2() { return projective_ring(Field::rationals(), 2); }

}  // namespace

TEST_CASE("polynomial parsing") {
    Ring r = qp2();
    CHECK(parse_polynomial("X1^2+X0^2", r) ==
          Polynomial::monomial(r, Term({0, 2, 0}), r.field.one()) +
              Polynomial::monomial(r, Term({2, 0, 0}), r.field.one()));
    CHECK(parse_polynomial("0", r).is_zero());
    CHECK(parse_polynomial("(X2^2-2*X0)^2", r) ==
          parse_polynomial("X2^4-4*X0*X2^2+4*X0^2", r));
    CHECK(parse_polynomial("1/2*X1 - 1/2*X1", r).is_zero());
    CHECK(parse_polynomial("2X1", r) == parse_polynomial("2*X1", r));
    CHECK(parse_polynomial(" - X1 + X0 ", r) == parse_polynomial("X0-X1", r));

    CHECK_THROWS_AS(parse_polynomial("X1X2", r), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("X9", r), UnknownVariable);
    CHECK_THROWS_AS(parse_polynomial("X1 +", r), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("y1", r), SyntaxError);

    Ring a = affine_ring(Field::rationals(), 2);
    CHECK(parse_polynomial("x1*x2", a).degree() == 2);
    CHECK_THROWS_AS(parse_polynomial("x0", a), WrongRing);
    CHECK_THROWS_AS(parse_polynomial("x3", a), UnknownVariable);
}

TEST_CASE("render and reparse round trip") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> c(-9, 9), e(0, 4), den(1, 7);
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        Ring r = projective_ring(f, 2);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<std::pair<Term, FieldElem>> terms;
            for (int i = 0; i < 5; ++i) {
                FieldElem coeff = f.kind() == FieldKind::Rationals
                                      ? f.from_ratio(c(rng), den(rng))
                                      : f.from_integer(c(rng));
                terms.emplace_back(Term({e(rng), e(rng), e(rng)}), coeff);
            }
            Polynomial p = Polynomial::from_terms(r, std::move(terms));
            CHECK(parse_polynomial(p.to_string(), r) == p);
        }
    }
}

TEST_CASE("scheme files parse") {
    auto doc = nlohmann::json::parse(R"({
        "format": 1, "field": "Q", "n": 2,
        "points": [{"coords": ["1", "1/2", "-1"], "mult": 2}]
    })");
    SchemeSpec spec = parse_scheme_json(doc);
    CHECK(spec.n == 2);
    REQUIRE(spec.components.size() == 1);
    const auto& pc = std::get<PointComponent>(spec.components[0]);
    CHECK(pc.mult == 2);
    CHECK(pc.coords[1] == spec.field.from_ratio(1, 2));

    CHECK_THROWS_AS(parse_scheme_json(nlohmann::json::parse("{}")), BadSchemeFile);
    CHECK_THROWS_AS(parse_scheme_json(nlohmann::json::parse(
                        R"({"format": 1, "field": "F4", "n": 2, "ideal": ["X1"]})")),
                    BadSchemeFile);
}

TEST_CASE("scheme JSON round trip") {
    for (const char* name : {"five_points_conic_one_double", "gauss_curvilinear",
                             "f2_double_point"}) {
        SchemeSpec spec = fixture_spec(name);
        nlohmann::json once = scheme_to_json(spec);
        nlohmann::json twice = scheme_to_json(parse_scheme_json(once));
        CHECK_MESSAGE(once == twice, name);
    }
}

TEST_CASE("fixture files on disk match the embedded copies") {
    for (const auto& [name, text] : fixture_texts()) {
        std::ifstream in(std::string(KDIFF_FIXTURES_DIR) + "/" + name + ".json");
        REQUIRE_MESSAGE(in.good(), name);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK_MESSAGE(nlohmann::json::parse(buf.str()) == nlohmann::json::parse(text),
                      name);
    }
}

TEST_CASE("result documents render the same numbers as their JSON") {
    ResultDocument doc;
    doc.command = "demo";
    doc.body["scheme"] = {{"deg", 5}, {"r", 2}};
    doc.body["hilbert"] = {{"values", {0, 3, 8}}, {"hp", 5}, {"ri", 5}};
    std::string table = doc.render_table();
    CHECK(table.find("deg: 5") != std::string::npos);
    CHECK(table.find("values: 0 3 8") != std::string::npos);
    CHECK(doc.to_json()["command"] == "demo");
    CHECK(doc.to_json()["scheme"]["deg"] == 5);
}

TEST_CASE("CLI runs end to end") {
    std::string file = std::string(KDIFF_FIXTURES_DIR) + "/f3_complete_intersection.json";
    const char* argv1[] = {"kdiff", "scheme", "info", file.c_str()};
    CHECK(cli_run(4, argv1) == 0);
    const char* argv2[] = {"kdiff", "--json", "kaehler", "hf", file.c_str(), "--m", "1"};
    CHECK(cli_run(7, argv2) == 0);
    const char* argv3[] = {"kdiff", "formula", "delta", "--n", "2", "--k", "2",
                           "--m", "1", "--field", "F2"};
    CHECK(cli_run(11, argv3) == 0);
    const char* bad[] = {"kdiff", "no-such-command"};
    CHECK(cli_run(2, bad) == 2);
    const char* missing[] = {"kdiff", "scheme", "info", "/nonexistent.json"};
    CHECK(cli_run(4, missing) == 1);
    const char* conflict[] = {"kdiff", "kaehler", "hf", file.c_str(),
                              "--torsion", "--koszul"};
    CHECK(cli_run(6, conflict) == 2);
    const char* wrong_m[] = {"kdiff", "kaehler", "hf", file.c_str(),
                             "--m", "2", "--torsion"};
    CHECK(cli_run(7, wrong_m) == 2);
    // a 1-dimensional ideal trips the safety cap, lowered here to keep it fast
    std::string flat =
        (std::filesystem::temp_directory_path() / "kdiff_flat_test.json").string();
    {
        std::ofstream out(flat);
        out << R"({"format": 1, "field": "Q", "n": 2, "ideal": ["X1"]})";
    }
    const char* capped[] = {"kdiff", "--max-degree", "20", "scheme", "info",
                            flat.c_str()};
    CHECK(cli_run(6, capped) == 1);
    std::filesystem::remove(flat);
}

namespace {

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(KDIFF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    pclose(pipe);
    return out;
}

}  // namespace

TEST_CASE("CLI binary output is correct and deterministic") {
    std::string file = std::string(KDIFF_FIXTURES_DIR) + "/f3_complete_intersection.json";
    std::string a = run_cli("--json kaehler hf " + file + " --m 1");
    std::string b = run_cli("--json kaehler hf " + file + " --m 1");
    CHECK(a == b);  // byte-identical JSON
    auto doc = nlohmann::json::parse(a);
    CHECK(doc["hilbert"]["hp"] == 10);
    CHECK(doc["hilbert"]["ri"] == 4);
    std::vector<long long> vals = doc["hilbert"]["values"];
    REQUIRE(vals.size() >= 6);
    CHECK(std::vector<long long>(vals.begin(), vals.begin() + 6) ==
          std::vector<long long>{0, 3, 8, 11, 10, 10});

    std::string coll = std::string(KDIFF_FIXTURES_DIR) + "/three_collinear_plus_one.json";
    auto cbp = nlohmann::json::parse(run_cli("--json check cbp " + coll + " --d 1"));
    CHECK(cbp["cbp"] == false);

    // the JSON and table renderings carry the same numbers
    std::string table = run_cli("kaehler hf " + file + " --m 1");
    CHECK(table.find("0 3 8 11 10 10") != std::string::npos);
    CHECK(table.find("hp: 10") != std::string::npos);
}
