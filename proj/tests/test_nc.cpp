#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tubecat/error.hpp"
#include "tubecat/nc_partition.hpp"

using namespace tubecat;

namespace {

NCPartition nc(int m, int n, std::vector<NCPartition::Block> b) { return NCPartition::validate(m, n, std::move(b)); }

const NCPartition kP = nc(2, 3, {{1, 5}, {2}, {3, 4}});
const NCPartition kQ = nc(3, 4, {{1, 4, 5, 7}, {2, 3}, {6}});

}  // namespace

TEST_CASE("validate accepts the worked example and the empty partition") {
    CHECK(kP.block_count() == 3);
    CHECK(nc(0, 0, {}).block_count() == 0);
    CHECK(nc(1, 1, {{2, 1}}).blocks() == std::vector<NCPartition::Block>{{1, 2}});
}

TEST_CASE("validate reports the crossing witness") {
    try {
        nc(2, 2, {{1, 3}, {2, 4}});
        FAIL("expected a crossing");
    } catch (const CrossingError& e) {
        CHECK(e.kind() == ErrorKind::Crossing);
        CHECK(e.witness() == std::array<int, 4>{1, 2, 3, 4});
    }
}

TEST_CASE("validate rejects non-partitions") {
    auto kind = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind([] { nc(1, 1, {{1}}); }) == ErrorKind::NotAPartition);
    CHECK(kind([] { nc(1, 1, {{1, 2}, {2}}); }) == ErrorKind::NotAPartition);
    CHECK(kind([] { nc(1, 1, {{1, 3}}); }) == ErrorKind::NotAPartition);
    CHECK(kind([] { nc(1, 1, {{1}, {}, {2}}); }) == ErrorKind::NotAPartition);
}

TEST_CASE("labels run right to left on the lower row") {
    CHECK(kP.label({Side::Lower, 1}) == 5);
    CHECK(kP.label({Side::Lower, 3}) == 3);
    CHECK(kP.point(4) == PointRef{Side::Lower, 2});
    CHECK(kP.upper_positions(0) == std::vector<int>{1});
    CHECK(kP.lower_positions(0) == std::vector<int>{1});
    CHECK(kP.lower_positions(2) == std::vector<int>{2, 3});
}

TEST_CASE("composition of the worked example") {
    const auto c = compose(kQ, kP);
    CHECK(c.partition == nc(2, 4, {{1, 3, 4, 6}, {2}, {5}}));
    // The block formed by p's {3,4} and q's {2,3} meets neither outer row.
    CHECK(c.removed == 1);
}

TEST_CASE("cup after cap leaves the empty partition with one removed block") {
    const auto c = compose(cup(), cap());
    CHECK(c.partition == NCPartition());
    CHECK(c.removed == 1);
}

TEST_CASE("identities are neutral") {
    CHECK(compose(identity_partition(3), kP).partition == kP);
    CHECK(compose(identity_partition(3), kP).removed == 0);
    CHECK(compose(kP, identity_partition(2)).partition == kP);
}

TEST_CASE("compose rejects mismatched shapes") {
    CHECK_THROWS_AS(compose(kP, kP), Error);
}

TEST_CASE("tensor of the worked example") {
    CHECK(tensor(kP, kQ) == nc(5, 7, {{1, 12}, {2}, {3, 6, 7, 9}, {4, 5}, {8}, {10, 11}}));
    CHECK(tensor(kP, NCPartition()) == kP);
    CHECK(tensor(cap(), cap()) == nc(0, 2, {{1}, {2}}));
}

TEST_CASE("adjoint reflects") {
    // Upper point 1 stays joined to lower position 1; upper 2,3 come from p's lower 2,3.
    CHECK(adjoint(kP) == nc(3, 2, {{1, 5}, {2, 3}, {4}}));
    CHECK(adjoint(adjoint(kQ)) == kQ);
    CHECK(adjoint(cap()) == cup());
}

TEST_CASE("builders") {
    CHECK(eta(1) == paircap());
    CHECK(eta(2) == nc(0, 4, {{1, 4}, {2, 3}}));
    CHECK(epsilon(2) == adjoint(eta(2)));
    CHECK(single_block(1, 2) == pants());
    CHECK(shirt() == adjoint(pants()));
    CHECK(paircup() == adjoint(paircap()));
    CHECK(cap() == nc(0, 1, {{1}}));
}

TEST_CASE("enumeration matches the set-partition filter") {
    auto one = enumerate_nc(1, 1);
    std::sort(one.begin(), one.end());
    CHECK(one == std::vector<NCPartition>{nc(1, 1, {{1}, {2}}), nc(1, 1, {{1, 2}})});
    CHECK(enumerate_nc(0, 4).size() == 14);
    CHECK(enumerate_nc(0, 0).size() == 1);
    for (int total = 0; total <= 7; ++total) {
        const auto expected = oracle::noncrossing_partitions(total);
        for (int m = 0; m <= total; ++m) {
            const auto got = enumerate_nc(m, total - m);
            CHECK(got.size() == expected.size());
            std::vector<NCPartition> want;
            for (const auto& b : expected) want.push_back(nc(m, total - m, b));
            std::sort(want.begin(), want.end());
            auto sorted = got;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == want);
        }
    }
    CHECK_THROWS_AS(enumerate_nc(7, 6), Error);
}
