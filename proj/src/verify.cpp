#include "kisincount/verify.hpp"

#include "kisincount/bigint.hpp"
#include "kisincount/census.hpp"
#include "kisincount/errors.hpp"
#include "kisincount/formula.hpp"
#include "kisincount/gf.hpp"
#include "kisincount/laurent.hpp"
#include "kisincount/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kisin {

namespace {

struct SuiteParams {
    std::vector<std::int64_t> primes;
    std::int64_t e_max;
    std::int64_t samples;
    // (p, e, k) triples for the brute-force enumeration runs.
    std::vector<std::array<std::int64_t, 3>> oracle_grid;
    std::int64_t zeta_e_max;
};

SuiteParams params_for(SuiteScale scale) {
    SuiteParams params;
    if (scale == SuiteScale::Desk) {
        params.primes = {3, 5, 7, 11, 13};
        params.e_max = 40;
        params.samples = 1000;
        for (std::int64_t e = 1; e <= 6; ++e) params.oracle_grid.push_back({3, e, 1});
        for (std::int64_t e = 1; e <= 4; ++e) params.oracle_grid.push_back({3, e, 2});
        for (std::int64_t e = 1; e <= 6; ++e) params.oracle_grid.push_back({5, e, 1});
        params.zeta_e_max = 4;
    } else {
        params.primes = {3, 5, 7};
        params.e_max = 12;
        params.samples = 200;
        for (std::int64_t e = 1; e <= 3; ++e) params.oracle_grid.push_back({3, e, 1});
        params.zeta_e_max = 2;
    }
    return params;
}

class Failures {
public:
    void add(const std::string& message) {
        ++count_;
        if (count_ <= 3) {
            if (!detail_.empty()) {
                detail_ += "; ";
            }
            detail_ += message;
        }
    }

    bool empty() const { return count_ == 0; }

    std::string detail() const {
        if (count_ <= 3) {
            return detail_;
        }
        return detail_ + "; and " + std::to_string(count_ - 3) + " more";
    }

private:
    std::int64_t count_ = 0;
    std::string detail_;
};

using Rng = std::mt19937_64;

FieldElement random_element(Rng& rng, const FieldSpec& spec) {
    std::uniform_int_distribution<std::int64_t> dist(0, spec.q - 1);
    return fe_from_index(dist(rng), spec);
}

LaurentPoly random_poly(Rng& rng, const std::shared_ptr<const FieldSpec>& spec) {
    std::uniform_int_distribution<std::int64_t> n_terms(0, 4);
    std::uniform_int_distribution<std::int64_t> exponent(-6, 6);
    std::uniform_int_distribution<std::int64_t> coeff(0, spec->q - 1);
    LaurentPoly out(spec);
    const std::int64_t n = n_terms(rng);
    for (std::int64_t i = 0; i < n; ++i) {
        out.set_term(exponent(rng), fe_from_index(coeff(rng), *spec));
    }
    return out;
}

std::vector<std::shared_ptr<const FieldSpec>> axiom_fields() {
    return {FieldSpec::make(3, 1), FieldSpec::make(3, 2), FieldSpec::make(3, 3),
            FieldSpec::make(5, 1), FieldSpec::make(5, 2), FieldSpec::make(7, 1)};
}

std::string check_field_axioms(const SuiteParams& params) {
    Rng rng(20260816);
    Failures failures;
    for (const auto& spec : axiom_fields()) {
        const FieldElement zero = fe_zero(*spec);
        const FieldElement one = fe_one(*spec);
        for (std::int64_t i = 0; i < params.samples; ++i) {
            const FieldElement a = random_element(rng, *spec);
            const FieldElement b = random_element(rng, *spec);
            const FieldElement c = random_element(rng, *spec);
            const auto tag = [&](const char* law) {
                return std::string(law) + " in GF(" + std::to_string(spec->q) + ") at a = " +
                       fe_to_string(a, *spec) + ", b = " + fe_to_string(b, *spec) + ", c = " +
                       fe_to_string(c, *spec);
            };
            if (!(fe_add(fe_add(a, b, *spec), c, *spec) ==
                  fe_add(a, fe_add(b, c, *spec), *spec))) {
                failures.add(tag("add associativity"));
            }
            if (!(fe_mul(fe_mul(a, b, *spec), c, *spec) ==
                  fe_mul(a, fe_mul(b, c, *spec), *spec))) {
                failures.add(tag("mul associativity"));
            }
            if (!(fe_add(a, b, *spec) == fe_add(b, a, *spec))) {
                failures.add(tag("add commutativity"));
            }
            if (!(fe_mul(a, b, *spec) == fe_mul(b, a, *spec))) {
                failures.add(tag("mul commutativity"));
            }
            if (!(fe_mul(a, fe_add(b, c, *spec), *spec) ==
                  fe_add(fe_mul(a, b, *spec), fe_mul(a, c, *spec), *spec))) {
                failures.add(tag("distributivity"));
            }
            if (!(fe_add(a, zero, *spec) == a) || !(fe_mul(a, one, *spec) == a)) {
                failures.add(tag("identities"));
            }
            if (!(fe_add(a, fe_neg(a, *spec), *spec) == zero)) {
                failures.add(tag("additive inverse"));
            }
            if (!a.is_zero() && !(fe_mul(a, fe_inv(a, *spec), *spec) == one)) {
                failures.add(tag("multiplicative inverse"));
            }
        }
    }
    return failures.detail();
}

std::string check_enumeration(const SuiteParams&) {
    Failures failures;
    for (const auto& spec : axiom_fields()) {
        const auto elements = enumerate_elements(*spec);
        const std::string field = "GF(" + std::to_string(spec->q) + ")";
        if (static_cast<std::int64_t>(elements.size()) != spec->q) {
            failures.add(field + " enumerates " + std::to_string(elements.size()) +
                         " elements instead of q");
        }
        if (elements.empty() || !elements.front().is_zero()) {
            failures.add(field + " does not start with zero");
        }
        std::set<std::vector<std::int64_t>> seen;
        std::int64_t identities = 0;
        for (const auto& element : elements) {
            seen.insert(element.coeffs);
            if (element == fe_one(*spec)) {
                ++identities;
            }
        }
        if (static_cast<std::int64_t>(seen.size()) != spec->q) {
            failures.add(field + " enumeration has duplicates");
        }
        if (identities != 1) {
            failures.add(field + " has " + std::to_string(identities) +
                         " multiplicative identities");
        }
    }
    return failures.detail();
}

std::string check_field_determinism(const SuiteParams&) {
    Failures failures;
    for (const auto& [p, k] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {11, 2}, {13, 2}}) {
        const auto first = FieldSpec::make(p, k);
        const auto second = FieldSpec::make(p, k);
        if (!(*first == *second)) {
            failures.add("field construction for p = " + std::to_string(p) + ", k = " +
                         std::to_string(k) + " is not reproducible");
        }
    }
    return failures.detail();
}

std::string check_ultrametric(const SuiteParams& params) {
    Rng rng(20260817);
    Failures failures;
    const auto spec = FieldSpec::make(3, 2);
    for (std::int64_t i = 0; i < params.samples; ++i) {
        const LaurentPoly f = random_poly(rng, spec);
        const LaurentPoly g = random_poly(rng, spec);
        const Valuation vf = f.valuation();
        const Valuation vg = g.valuation();
        const Valuation vsum = (f + g).valuation();
        const Valuation lower = std::min(vf, vg);
        if (vsum < lower) {
            failures.add("v(f+g) = " + vsum.to_string() + " below min(v f, v g) = " +
                         lower.to_string() + " for f = " + f.to_string() + ", g = " +
                         g.to_string());
        }
        if (!(vf == vg) && !(vsum == lower)) {
            failures.add("v(f+g) = " + vsum.to_string() + " misses min at distinct valuations for f = " +
                         f.to_string() + ", g = " + g.to_string());
        }
    }
    return failures.detail();
}

std::string check_multiplicativity(const SuiteParams& params) {
    Rng rng(20260818);
    Failures failures;
    const auto spec = FieldSpec::make(5, 1);
    for (std::int64_t i = 0; i < params.samples; ++i) {
        const LaurentPoly f = random_poly(rng, spec);
        const LaurentPoly g = random_poly(rng, spec);
        if (f.is_zero() || g.is_zero()) {
            if (!(f * g).is_zero()) {
                failures.add("product with zero is nonzero");
            }
            continue;
        }
        const std::int64_t expected = f.valuation().value() + g.valuation().value();
        if (!((f * g).valuation() == Valuation::finite(expected))) {
            failures.add("v(fg) != v(f) + v(g) for f = " + f.to_string() + ", g = " +
                         g.to_string());
        }
    }
    return failures.detail();
}

std::string check_phi_ring_map(const SuiteParams& params) {
    Rng rng(20260819);
    Failures failures;
    const auto spec = FieldSpec::make(3, 2);
    for (std::int64_t i = 0; i < params.samples; ++i) {
        const LaurentPoly f = random_poly(rng, spec);
        const LaurentPoly g = random_poly(rng, spec);
        if (!((f * g).phi() == f.phi() * g.phi())) {
            failures.add("phi(fg) != phi(f)phi(g) for f = " + f.to_string() + ", g = " +
                         g.to_string());
        }
        if (!((f + g).phi() == f.phi() + g.phi())) {
            failures.add("phi(f+g) != phi(f)+phi(g) for f = " + f.to_string() + ", g = " +
                         g.to_string());
        }
        if (!f.is_zero() &&
            !(f.phi().valuation() == Valuation::finite(spec->p * f.valuation().value()))) {
            failures.add("v(phi(f)) != p*v(f) for f = " + f.to_string());
        }
    }
    return failures.detail();
}

std::string check_truncation(const SuiteParams& params) {
    Rng rng(20260820);
    Failures failures;
    const auto spec = FieldSpec::make(5, 2);
    std::uniform_int_distribution<std::int64_t> t_dist(-4, 8);
    for (std::int64_t i = 0; i < params.samples; ++i) {
        const LaurentPoly f = random_poly(rng, spec);
        const std::int64_t t = t_dist(rng);
        const LaurentPoly cut = f.truncated_mod(t);
        if (!(cut.truncated_mod(t) == cut)) {
            failures.add("truncation is not idempotent for f = " + f.to_string() + ", t = " +
                         std::to_string(t));
        }
        if (!(f - cut).valuation().at_least(t)) {
            failures.add("f - truncate(f, t) has valuation below t for f = " + f.to_string() +
                         ", t = " + std::to_string(t));
        }
    }
    return failures.detail();
}

std::string sweep_point(const RamificationInput& input) {
    return "p = " + std::to_string(input.p) + ", e = " + std::to_string(input.e);
}

void for_each_sweep_input(const SuiteParams& params,
                          const std::function<void(const RamificationInput&)>& body) {
    for (std::int64_t p : params.primes) {
        for (std::int64_t e = 1; e <= params.e_max; ++e) {
            body(decompose_e(p, e));
        }
    }
}

std::string check_formula_census_histogram(const SuiteParams& params) {
    Failures failures;
    for_each_sweep_input(params, [&](const RamificationInput& input) {
        const CoefficientTable table = coefficient_table(input);
        std::vector<std::int64_t> histogram(input.e + 1, 0);
        for (const CellCount& cell : census(input)) {
            ++histogram[cell.h];
        }
        for (std::int64_t n = 0; n <= input.e; ++n) {
            if (table.c(n) != histogram[n]) {
                failures.add("c_" + std::to_string(n) + " = " + std::to_string(table.c(n)) +
                             " but the census has " + std::to_string(histogram[n]) +
                             " cells of weight " + std::to_string(n) + " at " +
                             sweep_point(input));
            }
        }
    });
    return failures.detail();
}

std::string check_partition_identity(const SuiteParams& params) {
    Failures failures;
    for_each_sweep_input(params, [&](const RamificationInput& input) {
        for (std::int64_t n = 0; n <= input.e; ++n) {
            const PartitionSizes sizes = partition_sizes(input, n);
            if (sizes.s_n1 + sizes.s_n2 != coeff_a(input, n)) {
                failures.add("|S_" + std::to_string(n) + ",1| + |S_" + std::to_string(n) +
                             ",2| != a_" + std::to_string(n) + " at " + sweep_point(input));
            }
            if (sizes.s_n1p + sizes.s_n2p != coeff_a_prime(input, n)) {
                failures.add("primed partition sum != a'_" + std::to_string(n) + " at " +
                             sweep_point(input));
            }
        }
    });
    return failures.detail();
}

std::string check_coefficient_vanishing(const SuiteParams& params) {
    Failures failures;
    for_each_sweep_input(params, [&](const RamificationInput& input) {
        const CoefficientTable table = coefficient_table(input);
        const std::int64_t dim = moduli_dimension(input);
        if (table.c(0) < 1) {
            failures.add("c_0 < 1 at " + sweep_point(input));
        }
        for (std::int64_t n = dim + 1; n <= input.e; ++n) {
            if (table.c(n) != 0) {
                failures.add("c_" + std::to_string(n) + " nonzero beyond the dimension at " +
                             sweep_point(input));
            }
        }
    });
    return failures.detail();
}

std::string check_dimension_census_max(const SuiteParams& params) {
    Failures failures;
    for_each_sweep_input(params, [&](const RamificationInput& input) {
        std::int64_t h_max = 0;
        for (const CellCount& cell : census(input)) {
            h_max = std::max(h_max, cell.h);
        }
        if (moduli_dimension(input) != h_max) {
            failures.add("dimension " + std::to_string(moduli_dimension(input)) +
                         " differs from census max h " + std::to_string(h_max) + " at " +
                         sweep_point(input));
        }
    });
    return failures.detail();
}

std::string check_singleton_low_ramification(const SuiteParams& params) {
    Failures failures;
    for (std::int64_t p : params.primes) {
        for (std::int64_t e = 1; e < p - 1; ++e) {
            const RamificationInput input = decompose_e(p, e);
            for (const BigInt& q : {BigInt(p), BigInt(p) * p}) {
                if (model_count(input, q) != 1) {
                    failures.add("count != 1 at " + sweep_point(input) + ", q = " + q.str());
                }
            }
        }
    }
    return failures.detail();
}

std::string check_count_monotone_in_q(const SuiteParams& params) {
    Failures failures;
    for_each_sweep_input(params, [&](const RamificationInput& input) {
        if (moduli_dimension(input) < 1) {
            return;
        }
        const BigInt q1 = input.p;
        const BigInt q2 = q1 * q1;
        const BigInt q3 = q2 * q1;
        if (!(model_count(input, q1) < model_count(input, q2) &&
              model_count(input, q2) < model_count(input, q3))) {
            failures.add("count not strictly increasing in q at " + sweep_point(input));
        }
    });
    return failures.detail();
}

std::string check_example_identity(const SuiteParams& params) {
    Failures failures;
    for (std::int64_t p : params.primes) {
        const RamificationInput input = decompose_e(p, p - 1);
        if (model_count(input, p) != p + 3) {
            failures.add("count at e = p-1, q = p is not p+3 for p = " + std::to_string(p));
        }
        const ExampleDecomposition record = example_decomposition(p);
        const BigInt pm1 = p - 1;
        if (record.aut_order != BigInt(p) * (p + 1) * pm1 * pm1) {
            failures.add("automorphism order mismatch for p = " + std::to_string(p));
        }
    }
    return failures.detail();
}

std::string check_census_h_bounds(const SuiteParams& params) {
    Failures failures;
    for_each_sweep_input(params, [&](const RamificationInput& input) {
        const auto cells = census(input);
        const auto expected = (input.e0 + 1) * (input.e0 + 1);
        if (static_cast<std::int64_t>(cells.size()) != expected) {
            failures.add("census size != (e0+1)^2 at " + sweep_point(input));
        }
        for (const CellCount& cell : cells) {
            if (cell.h < 0 || cell.h > input.e || cell.r < 0) {
                failures.add("h or r out of range at " + sweep_point(input) + ", cell (" +
                             std::to_string(cell.s) + ", " + std::to_string(cell.t) + ")");
            }
            const bool lt = cell.case_tag == CellCase::LowLt || cell.case_tag == CellCase::HighLt;
            if (cell.h != cell.r + (lt ? 1 : 0)) {
                failures.add("h != r + indicator at " + sweep_point(input) + ", cell (" +
                             std::to_string(cell.s) + ", " + std::to_string(cell.t) + ")");
            }
        }
    });
    return failures.detail();
}

std::string check_partition_empty_regions(const SuiteParams& params) {
    Failures failures;
    for_each_sweep_input(params, [&](const RamificationInput& input) {
        for (std::int64_t n = 0; n <= input.e; ++n) {
            const PartitionSizes sizes = partition_sizes(input, n);
            const WeightDecomposition w = decompose_n(input, n);
            if (w.n1 != 1 && sizes.s_n2 != 0) {
                failures.add("S_" + std::to_string(n) + ",2 nonempty with n_1 != 1 at " +
                             sweep_point(input));
            }
            if (w.n1p != 1 && sizes.s_n2p != 0) {
                failures.add("primed S_" + std::to_string(n) + ",2 nonempty with n_1' != 1 at " +
                             sweep_point(input));
            }
        }
    });
    return failures.detail();
}

struct OracleRun {
    RamificationInput input;
    std::shared_ptr<const FieldSpec> spec;
    OracleReport report;
};

std::vector<OracleRun> run_oracle_grid(const SuiteParams& params) {
    std::vector<OracleRun> runs;
    for (const auto& [p, e, k] : params.oracle_grid) {
        OracleRun run;
        run.input = decompose_e(p, e);
        run.spec = FieldSpec::make(p, k);
        run.report = oracle_count(run.input, run.spec);
        runs.push_back(std::move(run));
    }
    return runs;
}

std::string grid_point(const OracleRun& run) {
    return "p = " + std::to_string(run.input.p) + ", e = " + std::to_string(run.input.e) +
           ", q = " + std::to_string(run.spec->q);
}

std::string check_oracle_agreement(const std::vector<OracleRun>& runs) {
    Failures failures;
    for (const OracleRun& run : runs) {
        const BigInt q = run.spec->q;
        const BigInt by_formula = model_count(run.input, q);
        const BigInt by_census = census_count(run.input, q);
        if (run.report.total != by_formula || run.report.total != by_census) {
            failures.add("totals disagree at " + grid_point(run) + ": enumeration " +
                         run.report.total.str() + ", formula " + by_formula.str() +
                         ", census " + by_census.str());
        }
    }
    return failures.detail();
}

std::string check_oracle_per_cell(const std::vector<OracleRun>& runs) {
    Failures failures;
    for (const OracleRun& run : runs) {
        for (const CellCount& cell : census(run.input)) {
            const auto it = run.report.cells.find({cell.s, cell.t});
            const BigInt expected = bigint_pow(run.spec->q, cell.h);
            if (it == run.report.cells.end() || BigInt(it->second) != expected) {
                failures.add("cell (" + std::to_string(cell.s) + ", " + std::to_string(cell.t) +
                             ") count differs from q^h at " + grid_point(run));
            }
        }
    }
    return failures.detail();
}

std::string check_oracle_condition_equivalence(const std::vector<OracleRun>& runs) {
    Failures failures;
    for (const OracleRun& run : runs) {
        for (const std::string& failure : run.report.cross_check_failures) {
            failures.add(failure);
        }
    }
    return failures.detail();
}

std::string check_truncation_stability(const SuiteParams& params) {
    Rng rng(20260821);
    Failures failures;
    for (const auto& [p, e, k] : params.oracle_grid) {
        const RamificationInput input = decompose_e(p, e);
        const auto spec = FieldSpec::make(p, k);
        std::uniform_int_distribution<std::int64_t> coeff(0, spec->q - 1);
        for (std::int64_t s = 0; s <= input.e0; ++s) {
            for (std::int64_t t = 0; t <= input.e0; ++t) {
                for (const LatticePoint& point : enumerate_cell(input, spec, s, t)) {
                    for (int trial = 0; trial < 3; ++trial) {
                        LaurentPoly w = LaurentPoly::zero(spec);
                        for (std::int64_t exp = t; exp <= t + 3; ++exp) {
                            w.set_term(exp, fe_from_index(coeff(rng), *spec));
                        }
                        if (!valuation_condition(input, s, t, point.v + w)) {
                            failures.add("condition lost under tail perturbation at p = " +
                                         std::to_string(p) + ", e = " + std::to_string(e) +
                                         ", cell (" + std::to_string(s) + ", " +
                                         std::to_string(t) + "), v = " + point.v.to_string() +
                                         ", w = " + w.to_string());
                        }
                    }
                }
            }
        }
    }
    return failures.detail();
}

std::string check_cancellation_structure(const SuiteParams& params) {
    Failures failures;
    for (const auto& [p, e, k] : params.oracle_grid) {
        const RamificationInput input = decompose_e(p, e);
        const auto spec = FieldSpec::make(p, k);
        for (std::int64_t s = 0; s <= input.e0; ++s) {
            for (std::int64_t t = 0; t <= input.e0; ++t) {
                const std::int64_t r = r_st(input, s, t);
                for (const LatticePoint& point : enumerate_cell(input, spec, s, t)) {
                    if (point.v.is_zero() || -point.v.valuation().value() <= r) {
                        continue;
                    }
                    const std::int64_t low = point.v.valuation().value();
                    const auto where = "p = " + std::to_string(p) + ", e = " +
                                       std::to_string(e) + ", cell (" + std::to_string(s) +
                                       ", " + std::to_string(t) + "), v = " +
                                       point.v.to_string();
                    if (low != s - t) {
                        failures.add("deep pole not at exponent s - t for " + where);
                        continue;
                    }
                    const LaurentPoly rest =
                        point.v - LaurentPoly::monomial(spec, low, point.v.terms().at(low));
                    if (!rest.valuation().at_least(-r)) {
                        failures.add("residual pole still exceeds r after removing the lead for " +
                                     where);
                    }
                }
            }
        }
    }
    return failures.detail();
}

std::string check_zeta_extension(const SuiteParams& params) {
    Failures failures;
    for (std::int64_t e = 1; e <= params.zeta_e_max; ++e) {
        const RamificationInput input = decompose_e(3, e);
        const auto ext = FieldSpec::make(3, 2);
        const OracleReport report = oracle_count(input, ext);
        const CoefficientTable table = coefficient_table(input);
        BigInt expected = 0;
        for (std::int64_t n = 0; n <= input.e; ++n) {
            expected += BigInt(table.c(n)) * bigint_pow(BigInt(3), 2 * n);
        }
        if (report.total != expected || !report.cross_check_failures.empty()) {
            failures.add("extension-field count differs from sum c_n q^(2n) at p = 3, e = " +
                         std::to_string(e));
        }
    }
    return failures.detail();
}

CheckResult make_result(const std::string& name,
                        const std::function<std::string()>& body) {
    CheckResult result;
    result.name = name;
    try {
        result.detail = body();
        result.passed = result.detail.empty();
    } catch (const std::exception& ex) {
        result.passed = false;
        result.detail = std::string("exception: ") + ex.what();
    }
    return result;
}

}  // namespace

std::vector<CheckResult> run_suite(SuiteScale scale) {
    const SuiteParams params = params_for(scale);
    std::vector<CheckResult> results;

    results.push_back(make_result("gf-field-axioms", [&] { return check_field_axioms(params); }));
    results.push_back(make_result("gf-enumeration", [&] { return check_enumeration(params); }));
    results.push_back(
        make_result("gf-determinism", [&] { return check_field_determinism(params); }));
    results.push_back(
        make_result("laurent-ultrametric", [&] { return check_ultrametric(params); }));
    results.push_back(
        make_result("laurent-multiplicativity", [&] { return check_multiplicativity(params); }));
    results.push_back(
        make_result("laurent-phi-ring-map", [&] { return check_phi_ring_map(params); }));
    results.push_back(make_result("laurent-truncation", [&] { return check_truncation(params); }));
    results.push_back(make_result("formula-census-histogram",
                                  [&] { return check_formula_census_histogram(params); }));
    results.push_back(
        make_result("partition-identity", [&] { return check_partition_identity(params); }));
    results.push_back(make_result("coefficient-vanishing",
                                  [&] { return check_coefficient_vanishing(params); }));
    results.push_back(make_result("dimension-census-max",
                                  [&] { return check_dimension_census_max(params); }));
    results.push_back(make_result("singleton-low-ramification",
                                  [&] { return check_singleton_low_ramification(params); }));
    results.push_back(make_result("count-monotone-in-q",
                                  [&] { return check_count_monotone_in_q(params); }));
    results.push_back(
        make_result("example-identity", [&] { return check_example_identity(params); }));
    results.push_back(
        make_result("census-h-bounds", [&] { return check_census_h_bounds(params); }));
    results.push_back(make_result("partition-empty-regions",
                                  [&] { return check_partition_empty_regions(params); }));

    std::vector<OracleRun> runs;
    bool grid_ok = true;
    std::string grid_error;
    try {
        runs = run_oracle_grid(params);
    } catch (const std::exception& ex) {
        grid_ok = false;
        grid_error = std::string("exception: ") + ex.what();
    }
    const auto oracle_result = [&](const std::string& name,
                                   const std::function<std::string(const std::vector<OracleRun>&)>& body) {
        if (!grid_ok) {
            results.push_back(CheckResult{name, false, grid_error});
            return;
        }
        results.push_back(make_result(name, [&] { return body(runs); }));
    };
    oracle_result("oracle-agreement", check_oracle_agreement);
    oracle_result("oracle-per-cell", check_oracle_per_cell);
    oracle_result("oracle-condition-equivalence", check_oracle_condition_equivalence);

    results.push_back(make_result("oracle-truncation-stability",
                                  [&] { return check_truncation_stability(params); }));
    results.push_back(make_result("oracle-cancellation-structure",
                                  [&] { return check_cancellation_structure(params); }));
    results.push_back(
        make_result("oracle-zeta-extension", [&] { return check_zeta_extension(params); }));

    return results;
}

}  // namespace kisin
