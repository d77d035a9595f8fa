#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kisincount/census.hpp"
#include "kisincount/errors.hpp"
#include "kisincount/formula.hpp"
#include "kisincount/gf.hpp"
#include "kisincount/laurent.hpp"
#include "kisincount/oracle.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace kisin;

TEST_CASE("the zero parameter always satisfies both conditions") {
    const RamificationInput input = decompose_e(5, 7);
    const auto gf5 = FieldSpec::make(5, 1);
    const LaurentPoly zero = LaurentPoly::zero(gf5);
    for (std::int64_t s = 0; s <= input.e0; ++s) {
        for (std::int64_t t = 0; t <= input.e0; ++t) {
            CHECK(valuation_condition(input, s, t, zero));
            CHECK(matrix_condition(input, s, t, zero));
        }
    }
}

TEST_CASE("a simple pole at cell (0,1) cancels but a double pole does not") {
    const RamificationInput input = decompose_e(5, 7);
    const auto gf5 = FieldSpec::make(5, 1);
    for (std::int64_t a = 1; a < 5; ++a) {
        const LaurentPoly simple = LaurentPoly::monomial(gf5, -1, FieldElement{{a}});
        CHECK(valuation_condition(input, 0, 1, simple));
        CHECK(matrix_condition(input, 0, 1, simple));

        const LaurentPoly twice = LaurentPoly::monomial(gf5, -2, FieldElement{{a}});
        CHECK_FALSE(valuation_condition(input, 0, 1, twice));
        CHECK_FALSE(matrix_condition(input, 0, 1, twice));
    }
}

TEST_CASE("cell enumeration sizes") {
    const RamificationInput p57 = decompose_e(5, 7);
    const auto gf5 = FieldSpec::make(5, 1);

    const auto fixed = enumerate_cell(p57, gf5, 0, 0);
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0].v.is_zero());

    const auto line = enumerate_cell(p57, gf5, 0, 1);
    CHECK(line.size() == 5);

    const RamificationInput p32 = decompose_e(3, 2);
    const auto gf3 = FieldSpec::make(3, 1);
    CHECK(enumerate_cell(p32, gf3, 0, 1).size() == 3);
}

TEST_CASE("returned representatives are canonical polar parts") {
    const RamificationInput input = decompose_e(3, 4);
    const auto gf3 = FieldSpec::make(3, 1);
    for (std::int64_t s = 0; s <= input.e0; ++s) {
        for (std::int64_t t = 0; t <= input.e0; ++t) {
            for (const LatticePoint& point : enumerate_cell(input, gf3, s, t)) {
                CHECK(point.s == s);
                CHECK(point.t == t);
                CHECK(point.v.truncated_mod(0) == point.v);
                if (!point.v.is_zero()) {
                    CHECK(point.v.valuation().value() >= -input.e);
                }
            }
        }
    }
}

TEST_CASE("per-cell counts match q^h") {
    const RamificationInput input = decompose_e(3, 2);
    const auto gf3 = FieldSpec::make(3, 1);
    const OracleReport report = oracle_count(input, gf3);
    const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> expected{
        {{0, 0}, 1}, {{0, 1}, 3}, {{1, 0}, 1}, {{1, 1}, 1}};
    CHECK(report.cells == expected);
    CHECK(report.total == 6);
    CHECK(report.cross_check_failures.empty());

    for (const CellCount& cell : census(input)) {
        CHECK(BigInt(report.cells.at({cell.s, cell.t})) == bigint_pow(BigInt(3), cell.h));
    }
}

TEST_CASE("oracle totals agree with the closed form") {
    const std::vector<std::int64_t> expected_p3{1, 6, 6, 15};
    const auto gf3 = FieldSpec::make(3, 1);
    for (std::int64_t e = 1; e <= 4; ++e) {
        const RamificationInput input = decompose_e(3, e);
        const OracleReport report = oracle_count(input, gf3);
        CHECK(report.total == expected_p3[e - 1]);
        CHECK(report.total == model_count(input, 3));
        CHECK(report.cross_check_failures.empty());
        BigInt cell_sum = 0;
        for (const auto& [cell, count] : report.cells) {
            cell_sum += count;
        }
        CHECK(cell_sum == report.total);
    }

    const auto gf5 = FieldSpec::make(5, 1);
    const RamificationInput p54 = decompose_e(5, 4);
    CHECK(oracle_count(p54, gf5).total == 8);
}

TEST_CASE("oracle over an extension field") {
    const auto gf9 = FieldSpec::make(3, 2);
    const RamificationInput input = decompose_e(3, 2);
    const OracleReport report = oracle_count(input, gf9);
    CHECK(report.q == 9);
    CHECK(report.total == 12);
    CHECK(report.total == model_count(input, 9));
    CHECK(report.cross_check_failures.empty());
}

TEST_CASE("the condition depends only on the class modulo positive tails") {
    std::mt19937_64 rng(23);
    const auto gf3 = FieldSpec::make(3, 1);
    for (std::int64_t e = 1; e <= 3; ++e) {
        const RamificationInput input = decompose_e(3, e);
        std::uniform_int_distribution<std::int64_t> coeff(0, 2);
        for (std::int64_t s = 0; s <= input.e0; ++s) {
            for (std::int64_t t = 0; t <= input.e0; ++t) {
                for (const LatticePoint& point : enumerate_cell(input, gf3, s, t)) {
                    for (int trial = 0; trial < 5; ++trial) {
                        LaurentPoly w = LaurentPoly::zero(gf3);
                        for (std::int64_t exp = t; exp <= t + 3; ++exp) {
                            w.set_term(exp, FieldElement{{coeff(rng)}});
                        }
                        CHECK(valuation_condition(input, s, t, point.v + w));
                        CHECK(matrix_condition(input, s, t, point.v + w));
                    }
                }
            }
        }
    }
}

TEST_CASE("deep poles sit at exponent s - t and strip back below r") {
    const auto gf3 = FieldSpec::make(3, 1);
    bool saw_deep_pole = false;
    for (std::int64_t e = 1; e <= 5; ++e) {
        const RamificationInput input = decompose_e(3, e);
        for (std::int64_t s = 0; s <= input.e0; ++s) {
            for (std::int64_t t = 0; t <= input.e0; ++t) {
                const std::int64_t r = r_st(input, s, t);
                for (const LatticePoint& point : enumerate_cell(input, gf3, s, t)) {
                    if (point.v.is_zero() || -point.v.valuation().value() <= r) {
                        continue;
                    }
                    saw_deep_pole = true;
                    const std::int64_t low = point.v.valuation().value();
                    CHECK(low == s - t);
                    const LaurentPoly rest =
                        point.v - LaurentPoly::monomial(gf3, low, point.v.terms().at(low));
                    CHECK(rest.valuation().at_least(-r));
                }
            }
        }
    }
    CHECK(saw_deep_pole);
}

TEST_CASE("argument validation") {
    const RamificationInput input = decompose_e(3, 2);
    const auto gf5 = FieldSpec::make(5, 1);
    CHECK_THROWS_AS(oracle_count(input, gf5), std::invalid_argument);
    const auto gf3 = FieldSpec::make(3, 1);
    CHECK_THROWS_AS(enumerate_cell(input, gf3, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(valuation_condition(input, -1, 0, LaurentPoly::zero(gf3)),
                    std::invalid_argument);
}
