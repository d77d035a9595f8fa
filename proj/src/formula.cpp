#include "kisincount/formula.hpp"

#include "kisincount/census.hpp"
#include "kisincount/errors.hpp"
#include "kisincount/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kisin {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t quot = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --quot;
    }
    return quot;
}

void require_power_of_p(const BigInt& q, std::int64_t p) {
    if (extension_degree(q, p) < 1) {
        throw std::invalid_argument("q = " + q.str() + " is not a positive power of p = " +
                                    std::to_string(p));
    }
}

}  // namespace

RamificationInput decompose_e(std::int64_t p, std::int64_t e) {
    if (p < 3 || !is_prime(p)) {
        throw std::invalid_argument("decompose_e: p must be an odd prime >= 3, got p = " +
                                    std::to_string(p));
    }
    if (e < 1) {
        throw std::invalid_argument("decompose_e: e must be >= 1, got e = " +
                                    std::to_string(e));
    }
    RamificationInput input;
    input.p = p;
    input.e = e;
    input.e0 = e / (p - 1);
    input.e1 = e % (p - 1);
    return input;
}

WeightDecomposition decompose_n(const RamificationInput& input, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("decompose_n: n must be >= 0, got n = " +
                                    std::to_string(n));
    }
    WeightDecomposition w;
    w.n = n;
    w.n0 = n / (input.p - 1);
    w.n1 = n % (input.p - 1);
    w.n0p = floor_div(n - input.e1, input.p - 1);
    w.n1p = (n - input.e1) - (input.p - 1) * w.n0p;
    return w;
}

std::int64_t coeff_a(const RamificationInput& input, std::int64_t n) {
    const WeightDecomposition w = decompose_n(input, n);
    const std::int64_t arg = input.e0 - (input.p + 1) * w.n0 - w.n1 - 1;
    std::int64_t value = std::max<std::int64_t>(arg, 0);
    if (w.n1 == 0 || w.n1 == 1) {
        value += std::max<std::int64_t>(arg + 2, 0);
    }
    return value;
}

std::int64_t coeff_a_prime(const RamificationInput& input, std::int64_t n) {
    if (n == 0 && input.e1 == input.p - 2) {
        return input.e0;
    }
    const WeightDecomposition w = decompose_n(input, n);
    const std::int64_t arg = input.e0 - input.e1 - (input.p + 1) * w.n0p - w.n1p - 2;
    std::int64_t value = std::max<std::int64_t>(arg, 0);
    if (w.n1p == 0 || w.n1p == 1) {
        value += std::max<std::int64_t>(arg + 2, 0);
    }
    return value;
}

CoefficientTable coefficient_table(const RamificationInput& input) {
    CoefficientTable table;
    table.input = input;
    table.a.reserve(input.e + 1);
    table.a_prime.reserve(input.e + 1);
    for (std::int64_t n = 0; n <= input.e; ++n) {
        table.a.push_back(coeff_a(input, n));
        table.a_prime.push_back(coeff_a_prime(input, n));
    }

    std::int64_t h_max = 0;
    for (const CellCount& cell : census(input)) {
        h_max = std::max(h_max, cell.h);
    }
    for (std::int64_t n = h_max + 1; n <= input.e; ++n) {
        if (table.a[n] != 0 || table.a_prime[n] != 0) {
            throw CrossCheckError(
                "coefficient_table: nonzero coefficient beyond the census maximum at p = " +
                std::to_string(input.p) + ", e = " + std::to_string(input.e) + ", n = " +
                std::to_string(n) + " (a = " + std::to_string(table.a[n]) + ", a' = " +
                std::to_string(table.a_prime[n]) + ", max h = " + std::to_string(h_max) + ")");
        }
    }
    return table;
}

BigInt model_count(const RamificationInput& input, const BigInt& q) {
    require_power_of_p(q, input.p);
    const CoefficientTable table = coefficient_table(input);
    BigInt total = 0;
    for (std::int64_t n = 0; n <= input.e; ++n) {
        total += BigInt(table.c(n)) * bigint_pow(q, n);
    }
    return total;
}

ZetaFactors zeta_factors(const RamificationInput& input, const BigInt& q) {
    require_power_of_p(q, input.p);
    const CoefficientTable table = coefficient_table(input);
    ZetaFactors zeta;
    zeta.q = q;
    for (std::int64_t n = 0; n <= input.e; ++n) {
        if (table.c(n) > 0) {
            zeta.factors.emplace_back(n, table.c(n));
        }
    }
    return zeta;
}

std::int64_t moduli_dimension(const RamificationInput& input) {
    const CoefficientTable table = coefficient_table(input);
    std::int64_t dim = 0;
    for (std::int64_t n = 0; n <= input.e; ++n) {
        if (table.c(n) > 0) {
            dim = n;
        }
    }
    return dim;
}

ExampleDecomposition example_decomposition(std::int64_t p) {
    const RamificationInput input = decompose_e(p, p - 1);
    ExampleDecomposition record;
    record.total = model_count(input, p);
    const BigInt pm1 = p - 1;
    record.aut_order = BigInt(p) * (p + 1) * pm1 * pm1;
    record.middle_orbit = record.aut_order / (BigInt(p) * pm1 * pm1);
    if (record.middle_orbit != p + 1) {
        throw CrossCheckError("example_decomposition: middle orbit " +
                              record.middle_orbit.str() + " differs from p + 1 at p = " +
                              std::to_string(p));
    }
    if (record.total != record.middle_orbit + 2) {
        throw CrossCheckError("example_decomposition: total " + record.total.str() +
                              " differs from 1 + (p+1) + 1 at p = " + std::to_string(p));
    }
    return record;
}

}  // namespace kisin
