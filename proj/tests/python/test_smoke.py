"""End-to-end smoke tests for the Python bindings.

The brute-force check at the bottom reimplements the enumeration
independently (plain dicts over GF(3)) so the extension is compared
against something it does not share code with.
"""

import itertools

import pytest

import kisincount as kc


def test_count_known_values():
    assert kc.count(5, 4, 5) == 8
    assert kc.count(3, 2, 3) == 6
    assert kc.count(3, 1, 3) == 1
    assert kc.count(13, 40, 13) == 256
    assert kc.count(13, 40, 169) == 29584
    assert kc.count(3, 2, 9) == 12


def test_count_accepts_big_q():
    q = 3**50
    coefficients = kc.coefficients(3, 7)["c"]
    expected = sum(c * q**n for n, c in enumerate(coefficients))
    assert kc.count(3, 7, q) == expected
    assert expected > q ** kc.dimension(3, 7)


def test_dimension_and_zeta():
    assert kc.dimension(5, 4) == 1
    assert kc.dimension(3, 1) == 0
    assert kc.zeta_factors(5, 4) == [(0, 3), (1, 1)]
    assert kc.zeta_factors(3, 1) == [(0, 1)]


def test_coefficients_match_census_histogram():
    for p, e in itertools.product((3, 5, 7), range(1, 13)):
        table = kc.coefficients(p, e)
        histogram = [0] * (e + 1)
        for row in kc.census(p, e):
            histogram[row["h"]] += 1
        assert table["c"] == histogram, f"p = {p}, e = {e}"
        assert len(table["a"]) == e + 1
        assert all(x >= 0 for x in table["a"] + table["a_prime"])


def test_census_count_equals_count():
    for p, e in itertools.product((3, 5, 7), range(1, 13)):
        assert kc.census_count(p, e, p) == kc.count(p, e, p)


def test_partition_sizes_split_the_coefficients():
    table = kc.coefficients(5, 7)
    for n in range(8):
        sizes = kc.partition_sizes(5, 7, n)
        assert sizes["s_n1"] + sizes["s_n2"] == table["a"][n]
        assert sizes["s_n1p"] + sizes["s_n2p"] == table["a_prime"][n]


def test_example_decomposition():
    record = kc.example_decomposition(5)
    assert record["total"] == 8
    assert record["middle_orbit"] == 6
    assert record["aut_order"] == 480


def test_oracle_report_shape():
    report = kc.oracle_count(3, 2, 1)
    assert report["p"] == 3 and report["e"] == 2 and report["q"] == 3
    assert report["total"] == 6
    assert report["cross_check_failures"] == []
    by_cell = {(row["s"], row["t"]): row["count"] for row in report["cells"]}
    assert by_cell == {(0, 0): 1, (0, 1): 3, (1, 0): 1, (1, 1): 1}


def test_validation_errors_become_value_error():
    with pytest.raises(ValueError):
        kc.count(4, 2, 4)
    with pytest.raises(ValueError):
        kc.count(5, 0, 5)
    with pytest.raises(ValueError):
        kc.count(5, 4, 10)
    with pytest.raises(ValueError):
        kc.verify(scale="huge")


def test_verify_quick_suite_passes():
    results = kc.verify(scale="quick")
    failed = [row for row in results if not row["passed"]]
    assert failed == [], failed


# Independent brute force over GF(3), written against no library code.

def _phi(poly):
    return {3 * exp: coeff for exp, coeff in poly.items()}


def _shift(poly, amount):
    return {exp + amount: coeff for exp, coeff in poly.items()}


def _sub(lhs, rhs):
    out = dict(lhs)
    for exp, coeff in rhs.items():
        value = (out.get(exp, 0) - coeff) % 3
        if value:
            out[exp] = value
        else:
            out.pop(exp, None)
    return out


def _valuation_at_least(poly, bound):
    return all(exp >= bound for exp in poly if poly[exp])


def _brute_force_total(e):
    e0 = e // 2  # p = 3, so e = 2 * e0 + e1
    total = 0
    for s, t in itertools.product(range(e0 + 1), repeat=2):
        threshold = max(0, 2 * (s + t) - e)
        for coeffs in itertools.product(range(3), repeat=e):
            v = {j - e: c for j, c in enumerate(coeffs) if c}
            lhs = _sub(_shift(v, 2 * s), _shift(_phi(v), 2 * t))
            if _valuation_at_least(lhs, threshold):
                total += 1
    return total


def test_independent_brute_force_agrees():
    for e in (1, 2):
        expected = _brute_force_total(e)
        assert kc.oracle_count(3, e, 1)["total"] == expected
        assert kc.count(3, e, 3) == expected
