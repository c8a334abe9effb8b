#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spk/cli.hpp"
#include "spk/json_io.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = spk::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("tableau listing and counting") {
    RunResult count = run_cli({"ssyt", "count", "--shape", "2,1", "--m", "1", "--n", "1"});
    CHECK(count.code == 0);
    CHECK(count.out == "2\n");

    RunResult list = run_cli({"ssyt", "list", "--shape", "2,1", "--m", "1", "--n", "1"});
    CHECK(list.code == 0);
    CHECK(list.out == "1 1/1'\n1 1'/1'\n");

    RunResult csv =
        run_cli({"ssyt", "list", "--shape", "2,1", "--m", "1", "--n", "1", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "index,tableau\n1,1 1/1'\n2,1 1'/1'\n");
}

TEST_CASE("tableau listing as json round trips") {
    RunResult list =
        run_cli({"ssyt", "list", "--shape", "2,1", "--m", "1", "--n", "1", "--format", "json"});
    REQUIRE(list.code == 0);
    json parsed = json::parse(list.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["shape"] == json::array({2, 1}));
    for (const auto& item : parsed) {
        spk::shapes::Tableau t = spk::io::tableau_from_json(item);
        CHECK(spk::io::tableau_to_json(t) == item);
        CHECK(spk::shapes::is_valid_ssyt(t, 1, 1));
    }
}

TEST_CASE("character subcommands") {
    RunResult schur = run_cli({"char", "schur", "--shape", "2,1", "--m", "2"});
    CHECK(schur.code == 0);
    CHECK(schur.out == "x1^2*x2+x1*x2^2\n");

    RunResult viaTab = run_cli(
        {"char", "hook-schur", "--shape", "2,1", "--m", "2", "--n", "1", "--route", "ssyt"});
    RunResult viaFac = run_cli(
        {"char", "hook-schur", "--shape", "2,1", "--m", "2", "--n", "1", "--route", "factorized"});
    CHECK(viaTab.code == 0);
    CHECK(viaTab.out == viaFac.out);

    RunResult js =
        run_cli({"char", "hook-schur", "--shape", "2,1", "--m", "1", "--n", "1", "--format", "json"});
    REQUIRE(js.code == 0);
    json parsed = json::parse(js.out);
    json expected = json::array({json{{"exponents", {2, 1}}, {"coefficient", "1"}},
                                 json{{"exponents", {1, 2}}, {"coefficient", "1"}}});
    CHECK(parsed == expected);
}

TEST_CASE("plactic subcommands") {
    RunResult nf = run_cli({"plactic", "normal-form", "--word", "2,1,1"});
    CHECK(nf.code == 0);
    CHECK(nf.out == "sign +1\n1 1/2\n");

    RunResult prod = run_cli({"plactic", "product", "--left", R"({"rows":[["1"]]})", "--right",
                              R"({"rows":[["1"]]})", "--m", "1", "--n", "1"});
    CHECK(prod.code == 0);
    CHECK(prod.out == "sign +1\n1 1\n");

    RunResult classes = run_cli({"plactic", "classes", "--m", "1", "--n", "1", "--length", "3"});
    CHECK(classes.code == 0);
    CHECK(classes.out ==
          "classes 6\nshape 1,1,1: 2\nshape 2,1: 2\nshape 3: 2\nsigns consistent: yes\n");
}

TEST_CASE("verification subcommands") {
    RunResult ok = run_cli({"verify", "schur-identity", "--m", "2", "--max-degree", "4"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("pass") != std::string::npos);

    RunResult bad = run_cli({"verify", "ybe", "--m", "1", "--n", "1", "--corrupt-relations"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("fail") != std::string::npos);

    RunResult js = run_cli({"verify", "idempotent", "--format", "json"});
    REQUIRE(js.code == 0);
    json parsed = json::parse(js.out);
    CHECK(parsed["artifact"] == "superplactic-kit");
    CHECK(parsed["overall"] == "pass");
    CHECK(parsed["checks"][0]["name"] == "eulerian-idempotent");
    CHECK(parsed["checks"][0]["status"] == "pass");
}

TEST_CASE("error handling") {
    RunResult badWord = run_cli({"plactic", "normal-form", "--word", "1,x"});
    CHECK(badWord.code == 2);
    CHECK_FALSE(badWord.err.empty());

    RunResult badShape = run_cli({"ssyt", "count", "--shape", "1,2", "--m", "1", "--n", "1"});
    CHECK(badShape.code == 2);

    RunResult unknown = run_cli({"verify", "nosuch"});
    CHECK(unknown.code == 2);

    RunResult noArgs = run_cli({"ssyt", "list", "--m", "1", "--n", "1"});
    CHECK(noArgs.code == 2);

    RunResult tooBig = run_cli({"plactic", "classes", "--m", "2", "--n", "2", "--length", "12"});
    CHECK(tooBig.code == 2);
    CHECK(tooBig.err.find("exceeds") != std::string::npos);

    RunResult badJson = run_cli({"plactic", "product", "--left", "{", "--right",
                                 R"({"rows":[["1"]]})", "--m", "1", "--n", "1"});
    CHECK(badJson.code == 2);
}

TEST_CASE("help output") {
    RunResult top = run_cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("ssyt") != std::string::npos);
    CHECK(top.out.find("verify") != std::string::npos);

    RunResult sub = run_cli({"ssyt", "list", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--shape") != std::string::npos);
}

TEST_CASE("report bundle") {
    std::string path1 = "report_run1.json";
    std::string path2 = "report_run2.json";
    RunResult r1 = run_cli({"report", "all", "--m", "1", "--n", "1", "--max-degree", "4", "--r",
                            "3", "--out", path1});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("overall: pass") != std::string::npos);
    RunResult r2 = run_cli({"report", "all", "--m", "1", "--n", "1", "--max-degree", "4", "--r",
                            "3", "--out", path2});
    CHECK(r2.code == 0);

    std::ifstream f1(path1), f2(path2);
    REQUIRE(f1.good());
    REQUIRE(f2.good());
    json j1 = json::parse(f1);
    json j2 = json::parse(f2);
    CHECK(j1["artifact"] == "superplactic-kit");
    CHECK(j1["overall"] == "pass");
    CHECK(j1["parameters"]["m"] == 1);
    for (auto& c : j1["checks"]) c.erase("elapsed_ms");
    for (auto& c : j2["checks"]) c.erase("elapsed_ms");
    CHECK(j1 == j2);
    std::remove(path1.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("json encoders") {
    using namespace spk;
    shapes::Word w = shapes::parse_word("1,1'");
    CHECK(io::word_to_json(w) == json::array({"1", "1'"}));
    CHECK(io::word_from_json(json::array({"1", "1'"})) == w);
    CHECK_THROWS_AS(io::word_from_json(json{{"a", 1}}), spk::ParseError);

    shapes::Tableau t{{{shapes::even_letter(1), shapes::even_letter(1)}, {shapes::odd_letter(1)}}};
    json tj = io::tableau_to_json(t);
    CHECK(tj["shape"] == json::array({2, 1}));
    CHECK(io::tableau_from_json(tj) == t);
    json wrong = tj;
    wrong["shape"] = json::array({3});
    CHECK_THROWS_AS(io::tableau_from_json(wrong), spk::ShapeError);

    hecke::HeckeElement h = hecke::HeckeElement::basis({2, 1});
    json hj = io::hecke_to_json(h);
    CHECK(hj == json{{"r", 2}, {"terms", json::array({json{{"perm", {2, 1}}, {"coeff", "1"}}})}});

    freealg::TensorElement e = freealg::TensorElement::from_word(w);
    json ej = io::tensor_to_json(e);
    REQUIRE(ej.size() == 1);
    CHECK(ej[0]["word"] == json::array({"1", "1'"}));
    CHECK(ej[0]["coefficient"]["num"] == "1");
    CHECK(ej[0]["coefficient"]["den"] == "1");
}
