#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "tubecat/error.hpp"
#include "tubecat/lin_rep.hpp"
#include "tubecat/wreath.hpp"

using namespace tubecat;
using namespace fixture;

namespace {

TreeAut root_swap(int depth) {
    std::vector<TreeAut> kids(2, TreeAut(2, depth - 1));
    return TreeAut::make({1, 0}, kids);
}

bool all_pass(const std::vector<CheckResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.passed; });
}

ModelOptions model(int alphabet, int depth) {
    ModelOptions o;
    o.alphabet = alphabet;
    o.depth = depth;
    return o;
}

}  // namespace

TEST_CASE("action and restriction") {
    const TreeAut e(2, 3);
    CHECK(e.act(std::vector<int>{0, 1, 1}) == std::vector<int>{0, 1, 1});
    const auto g = root_swap(2);
    CHECK(g.act(std::vector<int>{0, 1}) == std::vector<int>{1, 1});
    CHECK(g.to_string() == "10[01,01]");
    CHECK_THROWS_AS(g.act(std::vector<int>{0, 1, 0}), Error);
    CHECK_THROWS_AS(TreeAut(2, 0).restrict(0), Error);
    CHECK_THROWS_AS(TreeAut::make({0, 0}, {TreeAut(2, 0), TreeAut(2, 0)}), Error);
}

TEST_CASE("group enumeration") {
    CHECK(enumerate_group(2, 1).size() == 2);
    CHECK(enumerate_group(2, 2).size() == 8);
    const auto g3 = enumerate_group(2, 3);
    CHECK(g3.size() == 128);
    CHECK(std::set<TreeAut>(g3.begin(), g3.end()).size() == 128);
    CHECK(group_order(3, 2) == 1296);
    CHECK(group_order(1, 5) == 1);
    CHECK_THROWS_AS(enumerate_group(3, 3), Error);
}

TEST_CASE("cocycle identity over the whole group") {
    const auto grp = enumerate_group(2, 3);
    for (const auto& g : grp) {
        for (const auto& h : grp) {
            for (int x = 0; x < 2; ++x) {
                REQUIRE((g * h).restrict(x) == g.restrict(h.act_letter(x)) * h.restrict(x));
            }
        }
        CHECK(g * g.inverse() == TreeAut(2, 3));
    }
}

TEST_CASE("coefficients") {
    const auto g = root_swap(2);
    CHECK(coefficient(g, std::vector<int>{1, 1}, std::vector<int>{0, 1}) == 1);
    CHECK(coefficient(g, std::vector<int>{0, 1}, std::vector<int>{1, 1}) == 1);
    CHECK(coefficient(g, std::vector<int>{0, 1}, std::vector<int>{0, 1}) == 0);
    CHECK(coefficient(g, std::vector<int>{}, std::vector<int>{}) == 1);
    CHECK_THROWS_AS(coefficient(g, std::vector<int>{0}, std::vector<int>{0, 1}), Error);
    CHECK_THROWS_AS(coefficient(g, std::vector<int>{0, 0, 0}, std::vector<int>{0, 0, 0}), Error);
}

TEST_CASE("representation matrices") {
    const auto g = root_swap(2);
    CHECK(rep_matrix(L(1), g).dense() == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
    // Words xy index as 2x + y; g sends xy to (1-x)y.
    const auto m = rep_matrix(psi(L(1)), g);
    for (int v = 0; v < 4; ++v) CHECK(m.at(static_cast<std::size_t>(v ^ 2), static_cast<std::size_t>(v)) == 1);
    CHECK_THROWS_AS(rep_matrix(psi_power(2), g), Error);
    for (const auto& h : enumerate_group(2, 2)) {
        CHECK(rep_matrix(N({L(1), L(0)}), g * h) == matmul(rep_matrix(N({L(1), L(0)}), g), rep_matrix(N({L(1), L(0)}), h)));
    }
}

TEST_CASE("a plain identity on words is not an intertwiner") {
    // ψ_1 and Leaf(2) share the word set X^2 but carry different actions.
    const auto id = IntMatrix::identity(4);
    bool intertwines = true;
    for (const auto& g : enumerate_group(2, 2)) {
        intertwines = intertwines && matmul(id, rep_matrix(psi(L(1)), g)) == matmul(rep_matrix(L(2), g), id);
    }
    CHECK_FALSE(intertwines);
}

TEST_CASE("intertwiner dimension is the orbit count") {
    const auto grp = enumerate_group(2, 2);
    CHECK(intertwiner_dimension(L(1), L(1), grp) == 2);
    CHECK(intertwiner_dimension(TubeObject(), TubeObject(), grp) == 1);
    CHECK(hom_span_rank(L(1), L(1), Alphabet(2)) <= intertwiner_dimension(L(1), L(1), grp));
}

TEST_CASE("relations hold in the classical model") {
    CHECK(all_pass(check_ax_relations(model(2, 2))));
    CHECK(all_pass(check_ax_relations(model(3, 1))));
    CHECK(all_pass(check_ax_relations(model(1, 3))));
    CHECK(sample_group(model(2, 3)).exhaustive);
}

TEST_CASE("intertwiner identities") {
    CHECK(all_pass(check_intertwiners(model(2, 2))));
    CHECK(all_pass(check_intertwiners(model(1, 2))));
}

TEST_CASE("checks are independent of the thread count") {
    auto o = model(2, 3);
    const auto one = check_ax_relations(o);
    o.threads = 3;
    const auto three = check_ax_relations(o);
    REQUIRE(one.size() == three.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].identity == three[i].identity);
        CHECK(one[i].cases == three[i].cases);
        CHECK(one[i].passed == three[i].passed);
    }
}
