#pragma once

#include "kisincount/bigint.hpp"
#include "kisincount/formula.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kisin {

/// The four-case classification of a cell (s, t): LOW/HIGH splits on
/// s + t <= e0 versus s + t > e0, GE/LT on p*s - t >= or < the valuation
/// threshold max{0, (p-1)(s+t) - e}.
enum class CellCase { LowGe, LowLt, HighGe, HighLt };

/// "LOW_GE", "LOW_LT", "HIGH_GE", "HIGH_LT".
std::string cell_case_name(CellCase c);

CellCase cell_case_from_name(const std::string& name);

/// One cell of the census: its classification, the pole bound r and the
/// exponent h with cell point count q^h. In the GE cases h = r, in the
/// LT cases h = r + 1.
struct CellCount {
    std::int64_t s;
    std::int64_t t;
    CellCase case_tag;
    std::int64_t r;
    std::int64_t h;
};

/// r_{s,t} = min{(p-1)s, floor((e-(p-1)s)/p), e-(p-1)t, floor((p-1)t/p)}.
/// Rejects (s, t) outside [0, e0]^2.
std::int64_t r_st(const RamificationInput& input, std::int64_t s, std::int64_t t);

/// Classifies the cell and computes h from the per-case formulas
/// (floor((p-1)t/p), (p-1)s+1, floor((e-(p-1)s)/p), e-(p-1)t+1), then
/// asserts agreement with r_st plus the LT indicator; disagreement
/// throws CrossCheckError rather than being patched.
CellCount h_st(const RamificationInput& input, std::int64_t s, std::int64_t t);

/// All (e0+1)^2 cells in ascending (s, t) order.
std::vector<CellCount> census(const RamificationInput& input);

/// sum of q^h over the census, exact.
BigInt census_count(const RamificationInput& input, const BigInt& q);

/// Cells with h = n counted by region: s_n1 (s+t <= e0, GE), s_n2
/// (s+t <= e0, LT), s_n1p (s+t > e0, GE), s_n2p (s+t > e0, LT).
struct PartitionSizes {
    std::int64_t n;
    std::int64_t s_n1;
    std::int64_t s_n2;
    std::int64_t s_n1p;
    std::int64_t s_n2p;
};

PartitionSizes partition_sizes(const RamificationInput& input, std::int64_t n);

}  // namespace kisin
