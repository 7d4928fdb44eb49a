#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tubecat/error.hpp"
#include "tubecat/int_matrix.hpp"

using namespace tubecat;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    oracle::Dense d(r, std::vector<std::int64_t>(c));
    std::uniform_int_distribution<int> dist(lo, hi);
    for (auto& row : d)
        for (auto& x : row) x = dist(rng);
    return IntMatrix::from_dense(d);
}

}  // namespace

TEST_CASE("storage") {
    const auto m = IntMatrix::from_triplets(2, 3, {{0, 1, 2}, {0, 1, 3}, {1, 2, 0}, {1, 0, -1}});
    CHECK(m.nnz() == 2);
    CHECK(m.at(0, 1) == 5);
    CHECK(m.at(1, 0) == -1);
    CHECK(m.at(1, 2) == 0);
    CHECK(m.triplets() == std::vector<IntMatrix::Triplet>{{0, 1, 5}, {1, 0, -1}});
    CHECK(parse_triplet_text(to_triplet_text(m)) == m);
    CHECK(to_csv(m) == "0,5,0\n-1,0,0\n");
    CHECK_THROWS_AS(parse_triplet_text("2 2 1\n5 0 1\n"), Error);
}

TEST_CASE("products agree with dense arithmetic") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_matrix(rng, 3, 4, -2, 2), b = random_matrix(rng, 4, 2, -2, 2);
        CHECK(matmul(a, b).dense() == oracle::mul(a.dense(), b.dense()));
        CHECK(kron(a, b).dense() == oracle::kron(a.dense(), b.dense()));
        CHECK(transpose(a).dense() == oracle::transpose(a.dense()));
    }
    CHECK_THROWS_AS(matmul(IntMatrix(2, 3), IntMatrix(2, 3)), Error);
}

TEST_CASE("rank") {
    CHECK(rank_exact(IntMatrix::identity(4)) == 4);
    CHECK(rank_exact(IntMatrix::from_dense({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == 1);
    CHECK(rank_exact(IntMatrix::from_dense({{1, 0, 0, 1}, {1, 1, 1, 1}})) == 2);
    CHECK(rank_exact(IntMatrix(0, 0)) == 0);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        const auto a = random_matrix(rng, r, c, -3, 3);
        // Low-rank products exercise the dependent-row path.
        const auto lr = matmul(random_matrix(rng, r, 2, -3, 3), random_matrix(rng, 2, c, -3, 3));
        CHECK(rank_exact(a) == oracle::rank(a.dense()));
        CHECK(rank_exact(lr) == oracle::rank(lr.dense()));
    }
}

TEST_CASE("rank survives 64-bit overflow") {
    const std::int64_t big = std::int64_t{1} << 40;
    const auto m = IntMatrix::from_dense({{big, big + 1, 3}, {big + 7, big - 5, 11}, {2 * big + 7, 2 * big - 4, 14}});
    CHECK(rank_exact(m) == oracle::rank(m.dense()));
    CHECK(rank_exact(m) == 2);
}
