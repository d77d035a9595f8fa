#include "kisincount/bigint.hpp"
#include "kisincount/census.hpp"
#include "kisincount/errors.hpp"
#include "kisincount/formula.hpp"
#include "kisincount/gf.hpp"
#include "kisincount/oracle.hpp"
#include "kisincount/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using kisin::BigInt;
using ordered_json = nlohmann::ordered_json;

BigInt parse_bigint(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not a nonnegative decimal integer: '" + text + "'");
    }
    return BigInt(text);
}

// Resolves the field cardinality from --k / --q; --q must be a power of p
// and, when --k is also given, the two must agree.
BigInt resolve_q(std::int64_t p, std::int64_t k, bool k_given, const std::string& q_text) {
    if (!q_text.empty()) {
        const BigInt q = parse_bigint(q_text);
        const std::int64_t derived = kisin::extension_degree(q, p);
        if (derived < 1) {
            throw std::invalid_argument("q = " + q.str() + " is not a positive power of p = " +
                                        std::to_string(p));
        }
        if (k_given && derived != k) {
            throw std::invalid_argument("--q " + q.str() + " contradicts --k " +
                                        std::to_string(k));
        }
        return q;
    }
    if (k < 1) {
        throw std::invalid_argument("k must be >= 1, got k = " + std::to_string(k));
    }
    return kisin::bigint_pow(p, k);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open output file " + output_path);
    }
    out << text;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* name : allowed) {
        if (format == name) {
            return;
        }
    }
    throw std::invalid_argument("unsupported format '" + format + "' for this subcommand");
}

int run_count(std::int64_t p, std::int64_t e, const BigInt& q, const std::string& format,
              const std::string& output) {
    require_format(format, {"plain", "json"});
    const kisin::RamificationInput input = kisin::decompose_e(p, e);
    const BigInt count = kisin::model_count(input, q);
    if (format == "plain") {
        emit(count.str() + "\n", output);
        return 0;
    }
    ordered_json doc;
    doc["p"] = p;
    doc["e"] = e;
    doc["q"] = q.str();
    doc["count"] = count.str();
    emit(doc.dump(2) + "\n", output);
    return 0;
}

int run_table(std::int64_t p, std::int64_t e_min, std::int64_t e_max, const BigInt& q,
              const std::string& format, const std::string& output) {
    require_format(format, {"csv", "json"});
    if (e_min < 1 || e_max < e_min) {
        throw std::invalid_argument("empty e range [" + std::to_string(e_min) + ", " +
                                    std::to_string(e_max) + "]");
    }
    std::ostringstream csv;
    ordered_json rows = ordered_json::array();
    csv << "p,e,q,count,dimension\n";
    for (std::int64_t e = e_min; e <= e_max; ++e) {
        const kisin::RamificationInput input = kisin::decompose_e(p, e);
        const BigInt count = kisin::model_count(input, q);
        const std::int64_t dim = kisin::moduli_dimension(input);
        if (format == "csv") {
            csv << p << ',' << e << ',' << q.str() << ',' << count.str() << ',' << dim << '\n';
        } else {
            ordered_json row;
            row["p"] = p;
            row["e"] = e;
            row["q"] = q.str();
            row["count"] = count.str();
            row["dimension"] = dim;
            rows.push_back(row);
        }
    }
    emit(format == "csv" ? csv.str() : rows.dump(2) + "\n", output);
    return 0;
}

int run_zeta(std::int64_t p, std::int64_t e, const BigInt& q, const std::string& format,
             const std::string& output) {
    require_format(format, {"plain", "json"});
    const kisin::RamificationInput input = kisin::decompose_e(p, e);
    const kisin::ZetaFactors zeta = kisin::zeta_factors(input, q);
    if (format == "plain") {
        std::ostringstream os;
        bool first = true;
        for (const auto& [n, c] : zeta.factors) {
            if (!first) {
                os << " * ";
            }
            first = false;
            if (n == 0) {
                os << "(1 - T)^-" << c;
            } else {
                os << "(1 - q^" << n << "*T)^-" << c;
            }
        }
        emit(os.str() + "\n", output);
        return 0;
    }
    ordered_json doc;
    doc["p"] = p;
    doc["e"] = e;
    doc["q"] = q.str();
    doc["factors"] = ordered_json::array();
    for (const auto& [n, c] : zeta.factors) {
        ordered_json factor;
        factor["n"] = n;
        factor["c"] = c;
        doc["factors"].push_back(factor);
    }
    emit(doc.dump(2) + "\n", output);
    return 0;
}

int run_dim(std::int64_t p, std::int64_t e, const std::string& format,
            const std::string& output) {
    require_format(format, {"plain", "json"});
    const kisin::RamificationInput input = kisin::decompose_e(p, e);
    const std::int64_t dim = kisin::moduli_dimension(input);
    if (format == "plain") {
        emit(std::to_string(dim) + "\n", output);
        return 0;
    }
    ordered_json doc;
    doc["p"] = p;
    doc["e"] = e;
    doc["dimension"] = dim;
    emit(doc.dump(2) + "\n", output);
    return 0;
}

int run_census_sum(std::int64_t p, std::int64_t e, const BigInt& q, const std::string& format,
                   const std::string& output) {
    require_format(format, {"plain", "json"});
    const kisin::RamificationInput input = kisin::decompose_e(p, e);
    const BigInt total = kisin::census_count(input, q);
    if (format == "plain") {
        emit(total.str() + "\n", output);
        return 0;
    }
    ordered_json doc;
    doc["p"] = p;
    doc["e"] = e;
    doc["q"] = q.str();
    doc["sum"] = total.str();
    emit(doc.dump(2) + "\n", output);
    return 0;
}

int run_census_rows(std::int64_t p, std::int64_t e, const std::string& format,
                    const std::string& output) {
    require_format(format, {"csv", "json"});
    const kisin::RamificationInput input = kisin::decompose_e(p, e);
    const auto cells = kisin::census(input);
    if (format == "csv") {
        std::ostringstream csv;
        csv << "s,t,case,r,h\n";
        for (const kisin::CellCount& cell : cells) {
            csv << cell.s << ',' << cell.t << ',' << kisin::cell_case_name(cell.case_tag) << ','
                << cell.r << ',' << cell.h << '\n';
        }
        emit(csv.str(), output);
        return 0;
    }
    ordered_json doc;
    doc["p"] = p;
    doc["e"] = e;
    doc["cells"] = ordered_json::array();
    for (const kisin::CellCount& cell : cells) {
        ordered_json row;
        row["s"] = cell.s;
        row["t"] = cell.t;
        row["case"] = kisin::cell_case_name(cell.case_tag);
        row["r"] = cell.r;
        row["h"] = cell.h;
        doc["cells"].push_back(row);
    }
    emit(doc.dump(2) + "\n", output);
    return 0;
}

int run_oracle(std::int64_t p, std::int64_t e, const BigInt& q, bool override_caps,
               const std::string& format, const std::string& output) {
    require_format(format, {"json", "plain"});
    const kisin::RamificationInput input = kisin::decompose_e(p, e);
    if (!override_caps) {
        if (e > 8) {
            throw std::invalid_argument("oracle refuses e > 8 without --override-caps (got e = " +
                                        std::to_string(e) + ")");
        }
        const BigInt work = kisin::bigint_pow(q, e + input.e0 + 1);
        if (work > 100000000) {
            throw std::invalid_argument("oracle refuses q^(e+e0+1) = " + work.str() +
                                        " > 10^8 without --override-caps");
        }
    }
    const auto spec = kisin::FieldSpec::make(p, kisin::extension_degree(q, p));
    const kisin::OracleReport report = kisin::oracle_count(input, spec);

    if (format == "plain") {
        emit(report.total.str() + "\n", output);
    } else {
        ordered_json doc;
        doc["p"] = report.p;
        doc["e"] = report.e;
        doc["q"] = report.q;
        doc["cells"] = ordered_json::array();
        for (const auto& [cell, count] : report.cells) {
            ordered_json row;
            row["s"] = cell.first;
            row["t"] = cell.second;
            row["count"] = count;
            doc["cells"].push_back(row);
        }
        doc["total"] = report.total.str();
        doc["cross_check_failures"] = report.cross_check_failures;
        emit(doc.dump(2) + "\n", output);
    }
    return report.cross_check_failures.empty() ? 0 : 2;
}

int run_verify(const std::string& suite, const std::string& output) {
    kisin::SuiteScale scale;
    if (suite == "quick") {
        scale = kisin::SuiteScale::Quick;
    } else if (suite == "desk") {
        scale = kisin::SuiteScale::Desk;
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "' (expected quick or desk)");
    }
    std::ostringstream os;
    bool all_passed = true;
    for (const kisin::CheckResult& result : kisin::run_suite(scale)) {
        if (result.passed) {
            os << "PASS " << result.name << "\n";
        } else {
            all_passed = false;
            os << "FAIL " << result.name << ": " << result.detail << "\n";
        }
    }
    emit(os.str(), output);
    return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts finite flat models of a rank-two constant group scheme over a "
                 "totally ramified degree-e extension of Q_p, three independent ways"};
    app.require_subcommand(1);

    std::int64_t p = 0;
    std::int64_t e = 0;
    std::int64_t e_min = 0;
    std::int64_t e_max = 0;
    std::int64_t k = 1;
    std::string q_text;
    std::string format;
    std::string output;
    std::string suite = "desk";
    bool census_sum = false;
    bool override_caps = false;

    // One variable backs each flag across subcommands; exactly one
    // subcommand parses per invocation. An empty format means the
    // subcommand's default.
    const auto add_p = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "characteristic, an odd prime")->required();
    };
    const auto add_e = [&](CLI::App* cmd) {
        cmd->add_option("--e", e, "ramification degree")->required();
    };
    const auto add_field = [&](CLI::App* cmd) {
        CLI::Option* k_opt = cmd->add_option("--k", k, "extension degree, q = p^k (default 1)");
        cmd->add_option("--q", q_text, "field cardinality, must be a power of p");
        return k_opt;
    };
    const auto add_output = [&](CLI::App* cmd, const char* default_format) {
        cmd->add_option("--format", format,
                        std::string("output format (default ") + default_format + ")");
        cmd->add_option("--output", output, "write output to this file instead of stdout");
    };

    auto* count_cmd = app.add_subcommand("count", "exact model count from the closed form");
    add_p(count_cmd);
    add_e(count_cmd);
    auto* count_k = add_field(count_cmd);
    add_output(count_cmd, "plain");

    auto* table_cmd = app.add_subcommand("table", "counts and dimensions over a range of e");
    add_p(table_cmd);
    auto* table_e = table_cmd->add_option("--e", e, "single ramification degree");
    table_cmd->add_option("--e-min", e_min, "first ramification degree");
    table_cmd->add_option("--e-max", e_max, "last ramification degree");
    auto* table_k = add_field(table_cmd);
    add_output(table_cmd, "csv");

    auto* zeta_cmd = app.add_subcommand("zeta", "factored form of the count polynomial");
    add_p(zeta_cmd);
    add_e(zeta_cmd);
    auto* zeta_k = add_field(zeta_cmd);
    add_output(zeta_cmd, "plain");

    auto* dim_cmd = app.add_subcommand("dim", "dimension of the moduli space");
    add_p(dim_cmd);
    add_e(dim_cmd);
    add_output(dim_cmd, "plain");

    auto* census_cmd = app.add_subcommand("census", "per-cell census rows, or their sum");
    add_p(census_cmd);
    add_e(census_cmd);
    census_cmd->add_flag("--sum", census_sum, "print the census total instead of the rows");
    auto* census_k = add_field(census_cmd);
    add_output(census_cmd, "csv");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration cross-check");
    add_p(oracle_cmd);
    add_e(oracle_cmd);
    oracle_cmd->add_flag("--override-caps", override_caps,
                         "run even beyond the documented safety caps");
    auto* oracle_k = add_field(oracle_cmd);
    add_output(oracle_cmd, "json");

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    verify_cmd->add_option("--suite", suite, "quick or desk")->capture_default_str();
    verify_cmd->add_option("--output", output, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex);
        return code == 0 ? 0 : 1;
    }

    const auto chosen_format = [&](const char* fallback) {
        return format.empty() ? std::string(fallback) : format;
    };

    try {
        if (*count_cmd) {
            return run_count(p, e, resolve_q(p, k, count_k->count() > 0, q_text),
                             chosen_format("plain"), output);
        }
        if (*table_cmd) {
            if (table_e->count() > 0) {
                if (e_min != 0 || e_max != 0) {
                    throw std::invalid_argument("give either --e or --e-min/--e-max, not both");
                }
                e_min = e_max = e;
            } else if (e_min == 0 && e_max == 0) {
                throw std::invalid_argument("table needs --e or --e-min/--e-max");
            }
            return run_table(p, e_min, e_max, resolve_q(p, k, table_k->count() > 0, q_text),
                             chosen_format("csv"), output);
        }
        if (*zeta_cmd) {
            return run_zeta(p, e, resolve_q(p, k, zeta_k->count() > 0, q_text),
                            chosen_format("plain"), output);
        }
        if (*dim_cmd) {
            return run_dim(p, e, chosen_format("plain"), output);
        }
        if (*census_cmd) {
            if (census_sum) {
                return run_census_sum(p, e, resolve_q(p, k, census_k->count() > 0, q_text),
                                      chosen_format("plain"), output);
            }
            return run_census_rows(p, e, chosen_format("csv"), output);
        }
        if (*oracle_cmd) {
            return run_oracle(p, e, resolve_q(p, k, oracle_k->count() > 0, q_text),
                              override_caps, chosen_format("json"), output);
        }
        if (*verify_cmd) {
            return run_verify(suite, output);
        }
    } catch (const kisin::CrossCheckError& ex) {
        std::cerr << "cross-check failure: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
