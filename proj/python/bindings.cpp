#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kisincount/bigint.hpp"
#include "kisincount/census.hpp"
#include "kisincount/formula.hpp"
#include "kisincount/gf.hpp"
#include "kisincount/oracle.hpp"
#include "kisincount/verify.hpp"

#include <cstdint>
#include <string>

namespace py = pybind11;

namespace {

// Route big integers through their decimal representation so Python sees
// true arbitrary-precision ints in both directions.
kisin::BigInt to_bigint(const py::int_& value) {
    return kisin::BigInt(static_cast<std::string>(py::str(value)));
}

py::int_ to_pyint(const kisin::BigInt& value) {
    PyObject* raw = PyLong_FromString(value.str().c_str(), nullptr, 10);
    if (raw == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(raw);
}

py::dict census_row(const kisin::CellCount& cell) {
    py::dict row;
    row["s"] = cell.s;
    row["t"] = cell.t;
    row["case"] = kisin::cell_case_name(cell.case_tag);
    row["r"] = cell.r;
    row["h"] = cell.h;
    return row;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact counts of rank-two lattice models over totally ramified "
        "p-adic base fields: closed formula, cell census, and brute-force "
        "enumeration.";

    m.def(
        "count",
        [](std::int64_t p, std::int64_t e, const py::int_& q) {
            return to_pyint(kisin::model_count(kisin::decompose_e(p, e), to_bigint(q)));
        },
        py::arg("p"), py::arg("e"), py::arg("q"),
        "Closed-form number of models over the residue field of size q.");

    m.def(
        "dimension",
        [](std::int64_t p, std::int64_t e) {
            return kisin::moduli_dimension(kisin::decompose_e(p, e));
        },
        py::arg("p"), py::arg("e"),
        "Largest n with a nonzero coefficient c_n.");

    m.def(
        "zeta_factors",
        [](std::int64_t p, std::int64_t e) {
            return kisin::zeta_factors(kisin::decompose_e(p, e), kisin::BigInt(p)).factors;
        },
        py::arg("p"), py::arg("e"),
        "List of (n, c_n) pairs with c_n > 0; the point count over GF(q) is "
        "sum c_n q^n.");

    m.def(
        "coefficients",
        [](std::int64_t p, std::int64_t e) {
            const kisin::CoefficientTable table =
                kisin::coefficient_table(kisin::decompose_e(p, e));
            py::dict out;
            out["a"] = table.a;
            out["a_prime"] = table.a_prime;
            py::list c;
            for (std::int64_t n = 0; n <= e; ++n) {
                c.append(table.c(n));
            }
            out["c"] = c;
            return out;
        },
        py::arg("p"), py::arg("e"),
        "Coefficient table {a, a_prime, c} indexed by weight n = 0..e.");

    m.def(
        "census",
        [](std::int64_t p, std::int64_t e) {
            py::list rows;
            for (const kisin::CellCount& cell : kisin::census(kisin::decompose_e(p, e))) {
                rows.append(census_row(cell));
            }
            return rows;
        },
        py::arg("p"), py::arg("e"),
        "Per-cell census rows {s, t, case, r, h} over the (s, t) grid.");

    m.def(
        "census_count",
        [](std::int64_t p, std::int64_t e, const py::int_& q) {
            return to_pyint(kisin::census_count(kisin::decompose_e(p, e), to_bigint(q)));
        },
        py::arg("p"), py::arg("e"), py::arg("q"),
        "Total count assembled cell by cell as sum q^h.");

    m.def(
        "partition_sizes",
        [](std::int64_t p, std::int64_t e, std::int64_t n) {
            const kisin::PartitionSizes sizes =
                kisin::partition_sizes(kisin::decompose_e(p, e), n);
            py::dict out;
            out["s_n1"] = sizes.s_n1;
            out["s_n2"] = sizes.s_n2;
            out["s_n1p"] = sizes.s_n1p;
            out["s_n2p"] = sizes.s_n2p;
            return out;
        },
        py::arg("p"), py::arg("e"), py::arg("n"),
        "Sizes of the four index partitions contributing to weight n.");

    m.def(
        "oracle_count",
        [](std::int64_t p, std::int64_t e, std::int64_t k) {
            const kisin::RamificationInput input = kisin::decompose_e(p, e);
            const auto spec = kisin::FieldSpec::make(p, k);
            const kisin::OracleReport report = kisin::oracle_count(input, spec);
            py::dict out;
            out["p"] = report.p;
            out["e"] = report.e;
            out["q"] = report.q;
            py::list cells;
            for (const auto& [key, value] : report.cells) {
                py::dict cell;
                cell["s"] = key.first;
                cell["t"] = key.second;
                cell["count"] = value;
                cells.append(cell);
            }
            out["cells"] = cells;
            out["total"] = to_pyint(report.total);
            out["cross_check_failures"] = report.cross_check_failures;
            return out;
        },
        py::arg("p"), py::arg("e"), py::arg("k") = 1,
        "Brute-force enumeration over GF(p^k); every candidate is judged by "
        "two independent conditions.");

    m.def(
        "example_decomposition",
        [](std::int64_t p) {
            const kisin::ExampleDecomposition record = kisin::example_decomposition(p);
            py::dict out;
            out["total"] = to_pyint(record.total);
            out["aut_order"] = to_pyint(record.aut_order);
            out["middle_orbit"] = to_pyint(record.middle_orbit);
            return out;
        },
        py::arg("p"),
        "Worked decomposition 1 + (p + 1) + 1 of the count at e = p - 1, q = p.");

    m.def(
        "verify",
        [](const std::string& scale) {
            kisin::SuiteScale parsed;
            if (scale == "quick") {
                parsed = kisin::SuiteScale::Quick;
            } else if (scale == "desk") {
                parsed = kisin::SuiteScale::Desk;
            } else {
                throw std::invalid_argument("verify: scale must be 'quick' or 'desk', got '" +
                                            scale + "'");
            }
            py::list results;
            for (const kisin::CheckResult& check : kisin::run_suite(parsed)) {
                py::dict row;
                row["name"] = check.name;
                row["passed"] = check.passed;
                row["detail"] = check.detail;
                results.append(row);
            }
            return results;
        },
        py::arg("scale") = "quick",
        "Run the internal invariant suite; returns {name, passed, detail} rows.");
}
