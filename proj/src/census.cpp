#include "kisincount/census.hpp"

#include "kisincount/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kisin {

std::string cell_case_name(CellCase c) {
    switch (c) {
        case CellCase::LowGe: return "LOW_GE";
        case CellCase::LowLt: return "LOW_LT";
        case CellCase::HighGe: return "HIGH_GE";
        case CellCase::HighLt: return "HIGH_LT";
    }
    throw std::logic_error("cell_case_name: invalid case tag");
}

CellCase cell_case_from_name(const std::string& name) {
    if (name == "LOW_GE") return CellCase::LowGe;
    if (name == "LOW_LT") return CellCase::LowLt;
    if (name == "HIGH_GE") return CellCase::HighGe;
    if (name == "HIGH_LT") return CellCase::HighLt;
    throw std::invalid_argument("cell_case_from_name: unknown case tag " + name);
}

namespace {

void require_cell_range(const RamificationInput& input, std::int64_t s, std::int64_t t) {
    if (s < 0 || s > input.e0 || t < 0 || t > input.e0) {
        throw std::invalid_argument("cell (" + std::to_string(s) + ", " + std::to_string(t) +
                                    ") is outside [0, e0]^2 with e0 = " +
                                    std::to_string(input.e0));
    }
}

}  // namespace

std::int64_t r_st(const RamificationInput& input, std::int64_t s, std::int64_t t) {
    require_cell_range(input, s, t);
    const std::int64_t p = input.p;
    const std::int64_t e = input.e;
    const std::int64_t r = std::min(std::min((p - 1) * s, (e - (p - 1) * s) / p),
                                    std::min(e - (p - 1) * t, (p - 1) * t / p));
    return r;
}

CellCount h_st(const RamificationInput& input, std::int64_t s, std::int64_t t) {
    require_cell_range(input, s, t);
    const std::int64_t p = input.p;
    const std::int64_t e = input.e;

    const std::int64_t threshold = std::max<std::int64_t>(0, (p - 1) * (s + t) - e);
    const bool low = threshold == 0;
    if (low != (s + t <= input.e0)) {
        throw CrossCheckError("h_st: region split disagrees with the valuation threshold at p = " +
                              std::to_string(p) + ", e = " + std::to_string(e) + ", cell (" +
                              std::to_string(s) + ", " + std::to_string(t) + ")");
    }
    const bool ge = p * s - t >= threshold;

    CellCount cell;
    cell.s = s;
    cell.t = t;
    if (low && ge) {
        cell.case_tag = CellCase::LowGe;
        cell.h = (p - 1) * t / p;
    } else if (low) {
        cell.case_tag = CellCase::LowLt;
        cell.h = (p - 1) * s + 1;
    } else if (ge) {
        cell.case_tag = CellCase::HighGe;
        cell.h = (e - (p - 1) * s) / p;
    } else {
        cell.case_tag = CellCase::HighLt;
        cell.h = e - (p - 1) * t + 1;
    }

    cell.r = r_st(input, s, t);
    const std::int64_t expected = cell.r + (ge ? 0 : 1);
    if (cell.h != expected) {
        throw CrossCheckError("h_st: case formula gives h = " + std::to_string(cell.h) +
                              " but r + indicator gives " + std::to_string(expected) +
                              " at p = " + std::to_string(p) + ", e = " + std::to_string(e) +
                              ", cell (" + std::to_string(s) + ", " + std::to_string(t) +
                              "), case " + cell_case_name(cell.case_tag));
    }
    return cell;
}

std::vector<CellCount> census(const RamificationInput& input) {
    std::vector<CellCount> cells;
    cells.reserve((input.e0 + 1) * (input.e0 + 1));
    for (std::int64_t s = 0; s <= input.e0; ++s) {
        for (std::int64_t t = 0; t <= input.e0; ++t) {
            cells.push_back(h_st(input, s, t));
        }
    }
    return cells;
}

BigInt census_count(const RamificationInput& input, const BigInt& q) {
    if (extension_degree(q, input.p) < 1) {
        throw std::invalid_argument("q = " + q.str() + " is not a positive power of p = " +
                                    std::to_string(input.p));
    }
    BigInt total = 0;
    for (const CellCount& cell : census(input)) {
        total += bigint_pow(q, cell.h);
    }
    return total;
}

PartitionSizes partition_sizes(const RamificationInput& input, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("partition_sizes: n must be >= 0, got n = " +
                                    std::to_string(n));
    }
    PartitionSizes sizes{n, 0, 0, 0, 0};
    for (const CellCount& cell : census(input)) {
        if (cell.h != n) {
            continue;
        }
        switch (cell.case_tag) {
            case CellCase::LowGe: ++sizes.s_n1; break;
            case CellCase::LowLt: ++sizes.s_n2; break;
            case CellCase::HighGe: ++sizes.s_n1p; break;
            case CellCase::HighLt: ++sizes.s_n2p; break;
        }
    }
    return sizes;
}

}  // namespace kisin
