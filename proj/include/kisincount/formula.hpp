#pragma once

#include "kisincount/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace kisin {

/// The ramification data of the base extension: e = (p-1)*e0 + e1 with
/// 0 <= e1 <= p-2.
struct RamificationInput {
    std::int64_t p;
    std::int64_t e;
    std::int64_t e0;
    std::int64_t e1;

    bool operator==(const RamificationInput& other) const = default;
};

/// Validates p (odd prime) and e >= 1 and derives (e0, e1).
RamificationInput decompose_e(std::int64_t p, std::int64_t e);

/// Both decompositions of a weight n >= 0:
///   n = (p-1)*n0 + n1        with 0 <= n1 <= p-2, n0 >= 0
///   n = (p-1)*n0p + n1p + e1 with 0 <= n1p <= p-2
/// The primed pair uses floor division of n - e1 by p-1, so n0p = -1
/// exactly when n < e1.
struct WeightDecomposition {
    std::int64_t n;
    std::int64_t n0;
    std::int64_t n1;
    std::int64_t n0p;
    std::int64_t n1p;
};

WeightDecomposition decompose_n(const RamificationInput& input, std::int64_t n);

/// a_n = max{e0 - (p+1)*n0 - n1 - 1, 0}, plus max{e0 - (p+1)*n0 - n1 + 1, 0}
/// when n1 is 0 or 1.
std::int64_t coeff_a(const RamificationInput& input, std::int64_t n);

/// a_n' = max{e0 - e1 - (p+1)*n0p - n1p - 2, 0}, plus the same expression
/// with -2 replaced by 0 when n1p is 0 or 1. Exception: when n = 0 and
/// e1 = p-2 the value is e0 outright.
std::int64_t coeff_a_prime(const RamificationInput& input, std::int64_t n);

/// The coefficients a_n and a_n' for n = 0..e; c(n) = a[n] + a_prime[n]
/// is the weight-n multiplicity of the count polynomial.
struct CoefficientTable {
    RamificationInput input;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> a_prime;

    std::int64_t c(std::int64_t n) const { return a[n] + a_prime[n]; }
};

/// Tabulates a_n and a_n' for n = 0..e and asserts both vanish beyond
/// the census's largest h value; disagreement throws CrossCheckError.
CoefficientTable coefficient_table(const RamificationInput& input);

/// The exact count sum_{n} (a_n + a_n') * q^n. Rejects q that is not a
/// positive power of p.
BigInt model_count(const RamificationInput& input, const BigInt& q);

/// The count polynomial in factored form: pairs (n, c_n) with c_n > 0 and
/// weights ascending. Over GF(q^m) the point count is sum c_n * q^(m*n).
struct ZetaFactors {
    std::vector<std::pair<std::int64_t, std::int64_t>> factors;
    BigInt q;
};

ZetaFactors zeta_factors(const RamificationInput& input, const BigInt& q);

/// max{n >= 0 : a_n + a_n' != 0}; well defined since c_0 >= 1.
std::int64_t moduli_dimension(const RamificationInput& input);

/// The bookkeeping of the worked example at e = p-1, q = p: total count
/// p+3, automorphism group order p(p+1)(p-1)^2, and the middle orbit of
/// size p+1, so that total = 1 + (p+1) + 1.
struct ExampleDecomposition {
    BigInt total;
    BigInt aut_order;
    BigInt middle_orbit;
};

/// Computes the record above and asserts the orbit identity; a failed
/// assertion throws CrossCheckError.
ExampleDecomposition example_decomposition(std::int64_t p);

}  // namespace kisin
