#pragma once

#include "kisincount/bigint.hpp"
#include "kisincount/formula.hpp"
#include "kisincount/gf.hpp"
#include "kisincount/laurent.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace kisin {

/// One point of the moduli space: the lattice with Iwasawa basis
/// (u^s, v; 0, u^t), where v is the canonical representative of its
/// class modulo GF(q)[[u]] (the polar part, all exponents in [-e, -1]).
struct LatticePoint {
    std::int64_t s;
    std::int64_t t;
    LaurentPoly v;
};

/// Brute-force point count with per-cell breakdown. cross_check_failures
/// records any disagreement between the two lattice-condition tests and
/// is expected to stay empty.
struct OracleReport {
    std::int64_t p;
    std::int64_t e;
    std::int64_t q;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> cells;
    BigInt total;
    std::vector<std::string> cross_check_failures;
};

/// The valuation form of the lattice condition:
/// v_u(v*u^((p-1)s) - phi(v)*u^((p-1)t)) >= max{0, (p-1)(s+t) - e}.
bool valuation_condition(const RamificationInput& input, std::int64_t s,
                         std::int64_t t, const LaurentPoly& v);

/// The matrix form: with A = (u^((p-1)s), -v*u^((p-1)s) + phi(v)*u^((p-1)t);
/// 0, u^((p-1)t)) and det(A) = u^((p-1)(s+t)), requires every entry of A
/// and every entry of u^e * adj(A) / det(A) to have valuation >= 0.
/// Computed independently of valuation_condition.
bool matrix_condition(const RamificationInput& input, std::int64_t s,
                      std::int64_t t, const LaurentPoly& v);

/// Enumerates every candidate v with support in [-e, -1] (each coefficient
/// ranging over all of GF(q)), keeps those passing valuation_condition,
/// and asserts matrix_condition agrees on every candidate; disagreement
/// throws CrossCheckError naming (s, t, v). Each survivor is its own
/// canonical representative, so the list size is the exact cell count.
std::vector<LatticePoint> enumerate_cell(const RamificationInput& input,
                                         std::shared_ptr<const FieldSpec> spec,
                                         std::int64_t s, std::int64_t t);

/// Sums enumerate_cell over all (s, t) in [0, e0]^2 (a disjoint union).
/// Cross-check failures are recorded in the report rather than thrown.
OracleReport oracle_count(const RamificationInput& input,
                          std::shared_ptr<const FieldSpec> spec);

}  // namespace kisin
