#include "kisincount/oracle.hpp"

#include "kisincount/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace kisin {

namespace {

void require_oracle_args(const RamificationInput& input, const FieldSpec& spec,
                         std::int64_t s, std::int64_t t) {
    if (spec.p != input.p) {
        throw std::invalid_argument("oracle: field characteristic " + std::to_string(spec.p) +
                                    " differs from p = " + std::to_string(input.p));
    }
    if (s < 0 || s > input.e0 || t < 0 || t > input.e0) {
        throw std::invalid_argument("oracle: cell (" + std::to_string(s) + ", " +
                                    std::to_string(t) + ") is outside [0, e0]^2 with e0 = " +
                                    std::to_string(input.e0));
    }
}

std::int64_t lattice_threshold(const RamificationInput& input, std::int64_t s, std::int64_t t) {
    return std::max<std::int64_t>(0, (input.p - 1) * (s + t) - input.e);
}

}  // namespace

bool valuation_condition(const RamificationInput& input, std::int64_t s,
                         std::int64_t t, const LaurentPoly& v) {
    require_oracle_args(input, v.spec(), s, t);
    const std::int64_t p = input.p;
    const LaurentPoly lhs = v.shifted((p - 1) * s) - v.phi().shifted((p - 1) * t);
    return lhs.valuation().at_least(lattice_threshold(input, s, t));
}

bool matrix_condition(const RamificationInput& input, std::int64_t s,
                      std::int64_t t, const LaurentPoly& v) {
    require_oracle_args(input, v.spec(), s, t);
    const std::int64_t p = input.p;
    auto spec = v.spec_ptr();
    const FieldElement one = fe_one(*spec);

    const LaurentPoly a11 = LaurentPoly::monomial(spec, (p - 1) * s, one);
    const LaurentPoly a12 = v.phi().shifted((p - 1) * t) - v.shifted((p - 1) * s);
    const LaurentPoly a21 = LaurentPoly::zero(spec);
    const LaurentPoly a22 = LaurentPoly::monomial(spec, (p - 1) * t, one);

    // u^e * adj(A) / det(A) with det(A) = u^((p-1)(s+t)): the adjugate of
    // an upper-triangular matrix, every entry shifted by e - (p-1)(s+t).
    const std::int64_t shift = input.e - (p - 1) * (s + t);
    const LaurentPoly b11 = a22.shifted(shift);
    const LaurentPoly b12 = (-a12).shifted(shift);
    const LaurentPoly b21 = (-a21).shifted(shift);
    const LaurentPoly b22 = a11.shifted(shift);

    for (const LaurentPoly* entry : {&a11, &a12, &a21, &a22, &b11, &b12, &b21, &b22}) {
        if (!entry->valuation().at_least(0)) {
            return false;
        }
    }
    return true;
}

std::vector<LatticePoint> enumerate_cell(const RamificationInput& input,
                                         std::shared_ptr<const FieldSpec> spec,
                                         std::int64_t s, std::int64_t t) {
    if (!spec) {
        throw std::invalid_argument("enumerate_cell: null field spec");
    }
    require_oracle_args(input, *spec, s, t);

    const std::int64_t e = input.e;
    const BigInt candidate_count = bigint_pow(spec->q, e);
    if (candidate_count > std::numeric_limits<std::int64_t>::max()) {
        throw std::invalid_argument("enumerate_cell: q^e = " + candidate_count.str() +
                                    " candidates is beyond enumerable range");
    }
    const std::int64_t count = candidate_count.convert_to<std::int64_t>();

    std::vector<LatticePoint> points;
    for (std::int64_t index = 0; index < count; ++index) {
        LaurentPoly v(spec);
        std::int64_t rest = index;
        for (std::int64_t j = 0; j < e; ++j) {
            const std::int64_t digit = rest % spec->q;
            rest /= spec->q;
            if (digit != 0) {
                v.set_term(-e + j, fe_from_index(digit, *spec));
            }
        }
        const bool by_valuation = valuation_condition(input, s, t, v);
        const bool by_matrix = matrix_condition(input, s, t, v);
        if (by_valuation != by_matrix) {
            throw CrossCheckError(
                "enumerate_cell: lattice-condition tests disagree at p = " +
                std::to_string(input.p) + ", e = " + std::to_string(e) + ", q = " +
                std::to_string(spec->q) + ", cell (" + std::to_string(s) + ", " +
                std::to_string(t) + "), v = " + v.to_string() + " (valuation form " +
                (by_valuation ? "accepts" : "rejects") + ", matrix form " +
                (by_matrix ? "accepts" : "rejects") + ")");
        }
        if (by_valuation) {
            points.push_back(LatticePoint{s, t, std::move(v)});
        }
    }
    return points;
}

OracleReport oracle_count(const RamificationInput& input,
                          std::shared_ptr<const FieldSpec> spec) {
    if (!spec) {
        throw std::invalid_argument("oracle_count: null field spec");
    }
    require_oracle_args(input, *spec, 0, 0);

    OracleReport report;
    report.p = input.p;
    report.e = input.e;
    report.q = spec->q;
    report.total = 0;
    for (std::int64_t s = 0; s <= input.e0; ++s) {
        for (std::int64_t t = 0; t <= input.e0; ++t) {
            try {
                const auto points = enumerate_cell(input, spec, s, t);
                const auto count = static_cast<std::int64_t>(points.size());
                report.cells[{s, t}] = count;
                report.total += count;
            } catch (const CrossCheckError& failure) {
                report.cross_check_failures.emplace_back(failure.what());
            }
        }
    }
    return report;
}

}  // namespace kisin
