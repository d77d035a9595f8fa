#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kisincount/errors.hpp"
#include "kisincount/formula.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace kisin;

TEST_CASE("ramification decomposition") {
    const RamificationInput a = decompose_e(5, 7);
    CHECK(a.e0 == 1);
    CHECK(a.e1 == 3);
    const RamificationInput b = decompose_e(3, 2);
    CHECK(b.e0 == 1);
    CHECK(b.e1 == 0);
    const RamificationInput c = decompose_e(7, 5);
    CHECK(c.e0 == 0);
    CHECK(c.e1 == 5);

    CHECK_THROWS_AS(decompose_e(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(decompose_e(9, 3), std::invalid_argument);
    CHECK_THROWS_AS(decompose_e(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(decompose_e(5, -1), std::invalid_argument);
}

TEST_CASE("weight decomposition uses floor division on the primed side") {
    const RamificationInput input = decompose_e(5, 7);
    const WeightDecomposition w = decompose_n(input, 1);
    CHECK(w.n0 == 0);
    CHECK(w.n1 == 1);
    CHECK(w.n0p == -1);
    CHECK(w.n1p == 2);

    const RamificationInput flat = decompose_e(5, 4);
    const WeightDecomposition z = decompose_n(flat, 0);
    CHECK(z.n0 == 0);
    CHECK(z.n1 == 0);
    CHECK(z.n0p == 0);
    CHECK(z.n1p == 0);

    const RamificationInput odd = decompose_e(3, 5);
    const WeightDecomposition v = decompose_n(odd, 4);
    CHECK(v.n0 == 2);
    CHECK(v.n1 == 0);
    CHECK(v.n0p == 1);
    CHECK(v.n1p == 1);

    CHECK_THROWS_AS(decompose_n(input, -1), std::invalid_argument);
}

TEST_CASE("weight decompositions reassemble n across a sweep") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        for (std::int64_t e = 1; e <= 20; ++e) {
            const RamificationInput input = decompose_e(p, e);
            for (std::int64_t n = 0; n <= e + 3; ++n) {
                const WeightDecomposition w = decompose_n(input, n);
                CHECK(n == (p - 1) * w.n0 + w.n1);
                CHECK(n == (p - 1) * w.n0p + w.n1p + input.e1);
                CHECK(w.n0 >= 0);
                CHECK(w.n0p >= -1);
                CHECK(w.n1 >= 0);
                CHECK(w.n1 <= p - 2);
                CHECK(w.n1p >= 0);
                CHECK(w.n1p <= p - 2);
                CHECK((w.n0p == -1) == (n < input.e1));
            }
        }
    }
}

TEST_CASE("unprimed coefficients") {
    const RamificationInput input = decompose_e(5, 4);
    CHECK(coeff_a(input, 0) == 2);
    CHECK(coeff_a(input, 1) == 1);
    CHECK(coeff_a(input, 2) == 0);
}

TEST_CASE("primed coefficients and the exceptional case") {
    const RamificationInput exceptional = decompose_e(5, 7);
    CHECK(exceptional.e1 == exceptional.p - 2);
    CHECK(coeff_a_prime(exceptional, 0) == 1);

    const RamificationInput flat = decompose_e(5, 4);
    CHECK(coeff_a_prime(flat, 0) == 1);
    CHECK(coeff_a_prime(flat, 1) == 0);
}

TEST_CASE("coefficient tables") {
    const CoefficientTable t54 = coefficient_table(decompose_e(5, 4));
    CHECK(t54.a == std::vector<std::int64_t>{2, 1, 0, 0, 0});
    CHECK(t54.a_prime == std::vector<std::int64_t>{1, 0, 0, 0, 0});

    const CoefficientTable t57 = coefficient_table(decompose_e(5, 7));
    CHECK(t57.c(0) == 3);
    CHECK(t57.c(1) == 1);
    for (std::int64_t n = 2; n <= 7; ++n) {
        CHECK(t57.c(n) == 0);
    }

    const CoefficientTable t52 = coefficient_table(decompose_e(5, 2));
    CHECK(t52.c(0) == 1);
    CHECK(t52.c(1) == 0);
    CHECK(t52.c(2) == 0);

    const CoefficientTable t34 = coefficient_table(decompose_e(3, 4));
    CHECK(t34.c(0) == 6);
    CHECK(t34.c(1) == 3);
    CHECK(t34.c(2) == 0);

    const CoefficientTable t36 = coefficient_table(decompose_e(3, 6));
    CHECK(t36.c(0) == 10);
    CHECK(t36.c(1) == 6);
    for (std::int64_t n = 2; n <= 6; ++n) {
        CHECK(t36.c(n) == 0);
    }

    const CoefficientTable big = coefficient_table(decompose_e(13, 40));
    CHECK(big.c(0) == 9);
    CHECK(big.c(1) == 6);
    CHECK(big.c(2) == 1);
    for (std::int64_t n = 3; n <= 40; ++n) {
        CHECK(big.c(n) == 0);
    }
}

TEST_CASE("coefficients are nonnegative with a positive constant term") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        for (std::int64_t e = 1; e <= 25; ++e) {
            const CoefficientTable table = coefficient_table(decompose_e(p, e));
            CHECK(table.c(0) >= 1);
            for (std::int64_t n = 0; n <= e; ++n) {
                CHECK(table.a[n] >= 0);
                CHECK(table.a_prime[n] >= 0);
            }
        }
    }
}

TEST_CASE("model counts") {
    CHECK(model_count(decompose_e(5, 4), 5) == 8);
    CHECK(model_count(decompose_e(3, 2), 3) == 6);
    CHECK(model_count(decompose_e(5, 2), 25) == 1);
    CHECK(model_count(decompose_e(13, 40), 169) == 29584);

    CHECK_THROWS_AS(model_count(decompose_e(5, 4), 10), std::invalid_argument);
    CHECK_THROWS_AS(model_count(decompose_e(5, 4), 1), std::invalid_argument);
    CHECK_THROWS_AS(model_count(decompose_e(5, 4), 3), std::invalid_argument);
}

TEST_CASE("zeta factors list positive multiplicities with ascending weights") {
    const ZetaFactors z54 = zeta_factors(decompose_e(5, 4), 5);
    REQUIRE(z54.factors.size() == 2);
    CHECK(z54.factors[0] == std::pair<std::int64_t, std::int64_t>{0, 3});
    CHECK(z54.factors[1] == std::pair<std::int64_t, std::int64_t>{1, 1});

    const ZetaFactors z52 = zeta_factors(decompose_e(5, 2), 5);
    REQUIRE(z52.factors.size() == 1);
    CHECK(z52.factors[0] == std::pair<std::int64_t, std::int64_t>{0, 1});

    const ZetaFactors z57 = zeta_factors(decompose_e(5, 7), 5);
    REQUIRE(z57.factors.size() == 2);
    CHECK(z57.factors[0] == std::pair<std::int64_t, std::int64_t>{0, 3});
    CHECK(z57.factors[1] == std::pair<std::int64_t, std::int64_t>{1, 1});
}

TEST_CASE("zeta factors reproduce counts over extensions") {
    for (std::int64_t p : {3, 5}) {
        for (std::int64_t e = 1; e <= 10; ++e) {
            const RamificationInput input = decompose_e(p, e);
            const ZetaFactors zeta = zeta_factors(input, p);
            for (std::int64_t m = 1; m <= 3; ++m) {
                const BigInt qm = bigint_pow(BigInt(p), m);
                BigInt from_factors = 0;
                for (const auto& [n, c] : zeta.factors) {
                    from_factors += BigInt(c) * bigint_pow(qm, n);
                }
                CHECK(from_factors == model_count(input, qm));
            }
        }
    }
}

TEST_CASE("moduli dimension") {
    CHECK(moduli_dimension(decompose_e(5, 4)) == 1);
    CHECK(moduli_dimension(decompose_e(5, 2)) == 0);
    CHECK(moduli_dimension(decompose_e(3, 2)) == 1);
    CHECK(moduli_dimension(decompose_e(13, 40)) == 2);
}

TEST_CASE("low ramification forces a single model") {
    for (std::int64_t p : {5, 7, 11, 13}) {
        for (std::int64_t e = 1; e < p - 1; ++e) {
            const RamificationInput input = decompose_e(p, e);
            CHECK(model_count(input, p) == 1);
            CHECK(model_count(input, BigInt(p) * p) == 1);
            CHECK(moduli_dimension(input) == 0);
        }
    }
}

TEST_CASE("worked example bookkeeping") {
    const ExampleDecomposition p5 = example_decomposition(5);
    CHECK(p5.total == 8);
    CHECK(p5.middle_orbit == 6);
    CHECK(p5.aut_order == 5 * 6 * 16);

    const ExampleDecomposition p3 = example_decomposition(3);
    CHECK(p3.total == 6);
    CHECK(p3.middle_orbit == 4);

    const ExampleDecomposition p7 = example_decomposition(7);
    CHECK(p7.aut_order == 2016);
    CHECK(p7.total == 10);

    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        CHECK(model_count(decompose_e(p, p - 1), p) == p + 3);
    }
}
