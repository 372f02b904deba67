#include "doctest.h"

#include <limits>

#include "exemplars/io.hpp"
#include "exemplars/relation.hpp"

#include "oracle.hpp"

using namespace exemplars;

TEST_CASE("minimal symmetric relation is valid") {
    const auto report = validate_relation({{0, 1}, {1, 0}});
    CHECK(report.valid);
    CHECK(report.is_symmetric);
    CHECK(report.violations.empty());
}

TEST_CASE("negative entry is a positivity violation") {
    const auto report = validate_relation({{0, -1}, {1, 0}});
    REQUIRE(!report.valid);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].rule == "positive");
    CHECK(report.violations[0].row == 0);
    CHECK(report.violations[0].col == 1);
    CHECK(report.violations[0].value == -1.0);
}

TEST_CASE("nonzero diagonal is flagged; asymmetry is informational only") {
    const auto report = validate_relation({{0, 2}, {3, 0.5}});
    REQUIRE(!report.valid);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].rule == "zero-diagonal");
    CHECK(report.violations[0].row == 1);
    CHECK(report.violations[0].col == 1);

    const auto fixed = validate_relation({{0, 2}, {3, 0}});
    CHECK(fixed.valid);
    CHECK(!fixed.is_symmetric);
}

TEST_CASE("NaN and infinity violate totality") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    const auto report = validate_relation({{0, nan}, {inf, 0}});
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0].rule == "finite");
    CHECK(report.violations[1].rule == "finite");
}

TEST_CASE("ragged table is a structural error, not a violation") {
    CHECK_THROWS_AS(validate_relation({{0, 1}, {1}}), ShapeError);
}

TEST_CASE("non-square table reports a squareness violation") {
    const auto report = validate_relation({{0, 1, 2}, {1, 0, 2}});
    CHECK(!report.valid);
    CHECK(report.violations[0].rule == "square");
}

TEST_CASE("unlabeled CSV defaults labels to row indices") {
    const auto relation = parse_relation("0,1\n1,0\n", false);
    CHECK(relation.size() == 2);
    CHECK(relation.labels() == std::vector<std::string>{"0", "1"});
}

TEST_CASE("labeled CSV reads labels verbatim and rejects duplicates") {
    const auto relation = parse_relation("label,a,b\na,0,1\nb,2,0\n", true);
    CHECK(relation.labels() == std::vector<std::string>{"a", "b"});
    CHECK(relation(1, 0) == 2.0);

    CHECK_THROWS_AS(parse_relation("label,a,a\na,0,1\na,2,0\n", true), ValidationError);
}

TEST_CASE("shape mismatch in CSV is a parse error") {
    CHECK_THROWS_AS(parse_relation("0,1,2\n1,0,2\n", false), ParseError);
}

TEST_CASE("invalid matrix is rejected at load") {
    CHECK_THROWS_AS(parse_relation("0,-1\n1,0\n", false), ValidationError);
}

TEST_CASE("save/load round-trips values bit-exactly") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto relation = oracle::random_relation(2 + seed % 7, seed);
        for (bool labeled : {false, true}) {
            const auto reloaded = parse_relation(serialize_relation(relation, labeled), labeled);
            REQUIRE(reloaded.size() == relation.size());
            CHECK(reloaded.data() == relation.data());
        }
        // every matrix accepted by the loader validates cleanly
        CHECK(validate_relation(relation.rows()).valid);
    }
}
