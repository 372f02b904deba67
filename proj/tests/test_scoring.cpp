#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exemplars/builders.hpp"
#include "exemplars/scoring.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace exemplars;

TEST_CASE("rank row of point 1 in {0,1,3}") {
    const auto relation = euclidean_relation(fixtures::three_points());
    const auto ranks = rank_table(relation);
    CHECK(ranks.rank(1, 1) == 1.0);
    CHECK(ranks.rank(1, 0) == 2.0);
    CHECK(ranks.rank(1, 2) == 3.0);
}

TEST_CASE("singleton dataset ranks itself 1") {
    const auto relation = RelationMatrix::create({{0.0}});
    const auto ranks = rank_table(relation);
    CHECK(ranks.rank(0, 0) == 1.0);
    const auto sv = aggregated_scores(ranks);
    CHECK(sv.scores[0] == 0.0);
    CHECK(standard_object(sv) == 0);
}

TEST_CASE("two equidistant points: self first in each row") {
    const auto relation = RelationMatrix::create({{0, 1}, {1, 0}});
    const auto ranks = rank_table(relation);
    for (std::size_t x : {0, 1}) {
        CHECK(ranks.rank(x, x) == 1.0);
        CHECK(ranks.rank(x, 1 - x) == 2.0);
    }
    const auto sv = aggregated_scores(ranks);
    CHECK(sv.scores == std::vector<double>{0.5, 0.5});
    CHECK(sv.argmax_set == std::vector<std::size_t>{0, 1});
}

TEST_CASE("aggregated scores on {0,1,3} match the brute-force oracle") {
    const auto relation = euclidean_relation(fixtures::three_points());
    const auto sv = aggregated_scores(rank_table(relation));
    const std::vector<double> expected{1.0, 4.0 / 3.0, 2.0 / 3.0};
    for (std::size_t x = 0; x < 3; ++x) {
        CHECK(sv.scores[x] == doctest::Approx(expected[x]).epsilon(1e-15));
        CHECK(sv.scores[x] == doctest::Approx(oracle::scores(relation)[x]).epsilon(1e-15));
    }
    CHECK(standard_object(sv) == 1);
}

TEST_CASE("canonical 6-point fixture scores") {
    const auto relation = fixtures::six_point_relation();
    const auto sv = aggregated_scores(rank_table(relation));
    const std::vector<double> expected{2.0, 8.0 / 3.0, 17.0 / 6.0, 3.0, 8.0 / 3.0, 11.0 / 6.0};
    REQUIRE(sv.n == 6);
    for (std::size_t x = 0; x < 6; ++x) {
        CHECK(sv.scores[x] == doctest::Approx(expected[x]).epsilon(1e-15));
    }
    CHECK(std::accumulate(sv.scores.begin(), sv.scores.end(), 0.0) ==
          doctest::Approx(15.0).epsilon(1e-15));
    CHECK(standard_object(sv) == 3);  // point 10
}

TEST_CASE("index-order rows are permutations and consistent with costs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 2 + seed % 17;
        const auto relation = oracle::random_relation(n, 1000 + seed);
        const auto ranks = rank_table(relation);
        const auto expected = oracle::ranks(relation);
        for (std::size_t x = 0; x < n; ++x) {
            CHECK(ranks.rank(x, x) == 1.0);
            std::vector<bool> seen(n, false);
            for (std::size_t y = 0; y < n; ++y) {
                CHECK(ranks.rank(x, y) == static_cast<double>(expected[x][y]));
                const auto r = static_cast<std::size_t>(ranks.rank(x, y));
                REQUIRE((r >= 1 && r <= n));
                CHECK(!seen[r - 1]);
                seen[r - 1] = true;
                for (std::size_t z = 0; z < n; ++z) {
                    if (relation(x, y) < relation(x, z)) {
                        CHECK(ranks.rank(x, y) < ranks.rank(x, z));
                    }
                }
            }
        }
    }
}

TEST_CASE("score-mass conservation and range on random relations") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 2 + seed % 63;
        const auto relation = oracle::random_relation(n, 7000 + seed);
        for (TiePolicy policy : {TiePolicy::IndexOrder, TiePolicy::MidRank}) {
            const auto sv = aggregated_scores(rank_table(relation, policy));
            const double mass = std::accumulate(sv.scores.begin(), sv.scores.end(), 0.0);
            CHECK(std::abs(mass - static_cast<double>(n * (n - 1)) / 2.0) < 1e-9);
            for (double s : sv.scores) {
                CHECK(s >= 0.0);
                CHECK(s <= static_cast<double>(n - 1));
            }
        }
    }
}

TEST_CASE("mid-rank rows sum to n(n+1)/2 and keep the voter at rank 1") {
    // heavy ties: integer costs in a small range
    SplitMix64 gen(99);
    const std::size_t n = 12;
    std::vector<std::vector<double>> values(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) values[i][j] = static_cast<double>(1 + gen.next_below(3));
        }
    }
    const auto ranks = rank_table(RelationMatrix::create(values), TiePolicy::MidRank);
    for (std::size_t x = 0; x < n; ++x) {
        CHECK(ranks.rank(x, x) == 1.0);
        double total = 0.0;
        for (std::size_t y = 0; y < n; ++y) total += ranks.rank(x, y);
        CHECK(total == doctest::Approx(n * (n + 1) / 2.0).epsilon(1e-12));
    }
}

TEST_CASE("monotone cost transforms leave ranks, scores and standard unchanged") {
    const auto square = [](double t) { return t * t; };
    const auto log1p = [](double t) { return std::log1p(t); };
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 3 + seed % 14;
        const auto relation = oracle::random_relation(n, 4000 + seed);
        const auto base_ranks = rank_table(relation);
        const auto base_scores = aggregated_scores(base_ranks);
        for (auto f : {+square, +log1p}) {
            auto rows = relation.rows();
            for (auto& row : rows) {
                for (double& v : row) v = f(v);
            }
            const auto mapped = RelationMatrix::create(std::move(rows));
            const auto ranks = rank_table(mapped);
            CHECK(ranks.ranks == base_ranks.ranks);
            const auto sv = aggregated_scores(ranks);
            CHECK(sv.scores == base_scores.scores);
            CHECK(standard_object(sv) == standard_object(base_scores));
        }
    }
}

TEST_CASE("permutation equivariance of scores") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 3 + seed % 12;
        const auto relation = oracle::random_relation(n, 500 + seed);  // tie-free a.s.
        const auto sv = aggregated_scores(rank_table(relation));

        // relabel by a rotation
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = (i + 1 + seed) % n;
        std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) rows[perm[i]][perm[j]] = relation(i, j);
        }
        const auto permuted = RelationMatrix::create(std::move(rows));
        const auto psv = aggregated_scores(rank_table(permuted));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(psv.scores[perm[i]] == sv.scores[i]);
        }
        std::vector<std::size_t> mapped;
        for (std::size_t i : sv.argmax_set) mapped.push_back(perm[i]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == psv.argmax_set);
    }
}
