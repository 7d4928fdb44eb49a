#include <doctest.h>

#include <sstream>

#include "tubecat/cli.hpp"

#ifndef TEST_DATA_DIR
#error "TEST_DATA_DIR must be defined"
#endif

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tubecat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("compose reads JSON files") {
    const auto r = run({"compose", "--lhs", data("q.json"), "--rhs", data("p.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "NC(2,4){1,3,4,6|2|5}\nrb=1\n");
}

TEST_CASE("compose accepts inline text and the nested fixtures") {
    const auto r = run({"compose", "--lhs",
                        "[NC(3,2){1,3,4,5|2}; NC(3,3){1,4,6|2|3|5}, NC(3,0){1,3|2}] : (3;2,3,1) -> (2;2,1)",
                        "--rhs", "[NC(1,3){1,2,4|3}; NC(1,3){1,2,4|3}, NC(0,3){1,3|2}] : (1;1) -> (3;2,3,1)"});
    CHECK(r.code == 0);
    CHECK(r.out == "[NC(1,2){1,2,3}; NC(1,3){1,2,4|3}] : (1;1) -> (2;2,1)\nrb=4\n");
}

TEST_CASE("matrix in triplet form") {
    const auto r = run({"matrix", "--morphism", data("pants.json"), "--alphabet", "2", "--format", "triplet"});
    CHECK(r.code == 0);
    CHECK(r.out == "4 2 2\n0 0 1\n3 1 1\n");
    CHECK(run({"matrix", "--morphism", "NC(0,1){1}", "--alphabet", "3", "--format", "csv"}).out == "1\n1\n1\n");
}

TEST_CASE("other subcommands") {
    CHECK(run({"tensor", "--lhs", data("p.json"), "--rhs", data("q.json")}).out ==
          "NC(5,7){1,12|2|3,6,7,9|4,5|8|10,11}\n");
    CHECK(run({"adjoint", "NC(2,3){1,5|2|3,4}"}).out == "NC(3,2){1,5|2,3|4}\n");
    CHECK(run({"psi", "1"}).out == "(1;1)\n");
    CHECK(run({"dual", "(2;1,3)"}).out == "(2;3,1)\n");
    CHECK(run({"eta", "2"}).out == "NC(0,4){1,4|2,3}\n");
    CHECK(run({"epsilon", "2"}).out == "NC(4,0){1,4|2,3}\n");
    CHECK(run({"pmorph", "1", "1"}).out == "[NC(1,2){1,2,3}; NC(2,2){1,4|2,3}] : (1;2) -> (2;1,1)\n");
    CHECK(run({"sdecomp", "(1;(3;1,2,0))"}).out.ends_with("levels=2 2 2 1\n"));
    CHECK(run({"hom", "1", "1"}).out == "count=2\nNC(1,1){1|2}\nNC(1,1){1,2}\n");
    CHECK(run({"rank", "1", "1", "--alphabet", "2"}).out == "2\n");
    CHECK(run({"rank", "--triplet", data("pants_x2.triplet")}).out == "2\n");
    CHECK(run({"parse", "(2;0,0)"}).out == "2\n");
    CHECK(run({"parse", "NC(1,1){2,1}", "--format", "json"}).out == "{\"blocks\":[[1,2]],\"m\":1,\"n\":1}\n");
    const auto rot = run({"rotate", "left", "[NC(1,1){1,2}; NC(1,1){1,2}] : (1;1) -> (1;1)"});
    CHECK(rot.code == 0);
    CHECK(run({"rotate", "left", "--inverse", rot.out.substr(0, rot.out.size() - 1)}).out ==
          "[NC(1,1){1,2}; NC(1,1){1,2}] : (1;1) -> (1;1)\n");
}

TEST_CASE("render writes SVG") {
    const auto r = run({"render", "NC(1,2){1,2,3}"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("<svg"));
    CHECK(r.out == run({"render", "NC(1,2){1,2,3}"}).out);
}

TEST_CASE("check runs a suite") {
    const auto r = run({"check", "--suite", "nc"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const auto j = run({"check", "--suite", "nc", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"compose", "--lhs", "NC(1,1){1,2}"}).code == 2);
    CHECK(run({"matrix", "--morphism", "NC(1,1){1,2}", "--format", "pdf"}).code == 2);
    CHECK(run({"rank"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("compose") != std::string::npos);
    const auto bad = run({"parse", "NC(2,2){1,3|2,4}"});
    CHECK(bad.code == 1);
    CHECK(bad.err.starts_with("Crossing"));
    CHECK(run({"compose", "--lhs", "NC(1,1){1,2}", "--rhs", "NC(2,2){1,4|2,3}"}).code == 1);
    CHECK(run({"pmorph"}).code == 1);
    CHECK(run({"rotate", "left", "NC(0,1){1}"}).code == 1);
    CHECK(run({"matrix", "--morphism", "NC(8,8){1,16|2,15|3,14|4,13|5,12|6,11|7,10|8,9}", "--bound", "100"}).code == 1);
    CHECK(run({"parse", "{\"m\": 1,"}).code == 1);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"check", "--suite", "tube", "--seed", "5"};
    CHECK(run(args).out == run(args).out);
}
