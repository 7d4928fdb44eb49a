#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tubecat/error.hpp"
#include "tubecat/io.hpp"
#include "tubecat/random.hpp"

using namespace tubecat;
using namespace fixture;

namespace {

ErrorKind kind_of(auto f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::NotAPartition;
}

}  // namespace

TEST_CASE("partition text") {
    const auto p = nc(2, 3, {{1, 5}, {2}, {3, 4}});
    CHECK(io::to_text(p) == "NC(2,3){1,5|2|3,4}");
    CHECK(io::parse_partition(" NC( 2 , 3 ){ 1,5 | 2 | 3,4 } ") == p);
    CHECK(io::to_text(NCPartition()) == "NC(0,0){}");
    CHECK(io::parse_partition("NC(0,0){}") == NCPartition());
    CHECK(kind_of([] { io::parse_partition("NC(2,3){1,5|2"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_partition("NC(2,2){1,3|2,4}"); }) == ErrorKind::Crossing);
    CHECK(kind_of([] { io::parse_partition("NC(1,1){1,2}x"); }) == ErrorKind::Parse);
}

TEST_CASE("object text") {
    CHECK(io::to_text(N({L(2), L(1)})) == "(2;2,1)");
    CHECK(io::to_text(L(3)) == "3");
    CHECK(io::to_text(TubeObject()) == "0");
    CHECK(io::parse_object("(1;(3;1,2,0))") == N({N({L(1), L(2), L(0)})}));
    CHECK(io::parse_object("(2;0,0)") == L(2));
    CHECK(kind_of([] { io::parse_object("(2;1)"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_object("(1;"); }) == ErrorKind::Parse);
}

TEST_CASE("morphism text") {
    CHECK(io::parse_morphism("NC(1,2){1,2,3}") == TubeMorphism::base(pants()));
    const auto text = io::to_text(pi());
    CHECK(text == "[NC(1,3){1,2,4|3}; NC(1,3){1,2,4|3}, NC(0,3){1,3|2}] : (1;1) -> (3;2,3,1)");
    CHECK(io::parse_morphism(text) == pi());
    CHECK(kind_of([] { io::parse_morphism("[NC(1,1){1,2}; NC(1,1){1,2}] : (1;1)"); }) == ErrorKind::Parse);
    // Inner morphisms are typed by their block while parsing.
    CHECK(kind_of([] { io::parse_morphism("[NC(1,1){1,2}; NC(1,1){1,2}] : (1;1) -> (1;2)"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_morphism("NC(1,1){1,2} : 1 -> 2"); }) == ErrorKind::Parse);
}

TEST_CASE("json forms") {
    CHECK(io::to_json(nc(1, 1, {{1, 2}})) == io::json::parse(R"({"m":1,"n":1,"blocks":[[1,2]]})"));
    CHECK(io::morphism_from_json(io::json::parse(R"({"m":1,"n":2,"blocks":[[1,2,3]]})")) ==
          TubeMorphism::base(pants()));
    CHECK(io::object_from_json(io::json::parse(R"({"m":2,"children":[1,{"m":1,"children":[2]}]})")) ==
          N({L(1), N({L(2)})}));
    CHECK(kind_of([] { io::partition_from_json(io::json::parse(R"({"m":1})")); }) == ErrorKind::Parse);
    const auto mj = io::to_json(IntMatrix::from_dense({{0, 2}, {1, 0}}));
    CHECK(mj.at("rows") == 2);
    CHECK(mj.at("entries").size() == 2);
}

TEST_CASE("round trips on random values") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_object(rng, 5, 3), b = random_object(rng, 5, 3);
        CHECK(io::parse_object(io::to_text(a)) == a);
        CHECK(io::object_from_json(io::to_json(a)) == a);
        const auto r = random_morphism(a, b, rng);
        CHECK(io::parse_morphism(io::to_text(r)) == r);
        CHECK(io::morphism_from_json(io::json::parse(io::to_json(r).dump())) == r);
        const auto& p = r.outer();
        CHECK(io::parse_partition(io::to_text(p)) == p);
        CHECK(io::partition_from_json(io::to_json(p)) == p);
    }
}

TEST_CASE("check reports serialise") {
    CheckResult r{"demo", {{"alphabet", "2"}}, 5, false, "g=10"};
    const auto j = io::to_json(r);
    CHECK(j.at("status") == "fail");
    CHECK(j.at("counterexample") == "g=10");
    r.passed = true;
    r.counterexample.reset();
    CHECK(io::to_json(r).at("status") == "pass");
    CHECK_FALSE(io::to_json(r).contains("counterexample"));
}
