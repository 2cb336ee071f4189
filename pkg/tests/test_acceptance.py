"""Acceptance gate: one test per acceptance criterion, at the stated
tolerance, each printing a single pass line (an assertion failure is the
fail line).  Reference integers and digit strings are duplicated here as
literals so a corrupted fixture elsewhere cannot silently pass.

Stated runtime expectations are enforced with a 10x allowance so a
pathological regression fails while machine variance does not.
"""

import time
from decimal import Decimal, localcontext

from acyclic_census import verify
from acyclic_census.asymptotics import (DEFAULT_PRECISION, PrecisionContext,
                                        _derivative_routes, convergence_report,
                                        find_least_root, psi_at_negated_root)
from acyclic_census.counts import (arc_enumerator, count_acyclic, count_bicolored,
                                   eval_at_k, multi_arc_enumerator,
                                   smallcover_cube_classes,
                                   smallcover_simplexpower_classes)
from acyclic_census.oracle import (brute_count, brute_count_bicolored,
                                   brute_count_weighted)
from acyclic_census.series import (from_sequence, multiply, psi_series,
                                   reciprocal, unit, verify_identity)

TABLE = {
    "a": {1: 1, 2: 3, 3: 25, 4: 543, 5: 29281, 6: 3781503},
    "h_r2": {1: 1, 2: 7, 3: 289, 4: 63487, 5: 69711361, 6: 367404658687},
    "h_r3": {1: 1, 2: 15, 3: 2689, 4: 5140479, 5: 98267258881, 6: 18033699790913535},
    "h_r4": {1: 1, 2: 31, 3: 23041, 4: 365330431, 5: 115851037900801,
             6: 705367139018659069951},
    "b": {1: 2, 2: 8, 3: 74, 4: 1664, 5: 90722, 6: 11756288},
}

CONSTANTS = {
    1: ("1.4880785455997102947", "1.7410611252932298403"),
    3: ("1.1657706116147275128", "1.1928652399365987835"),
    7: ("1.0713348333900423361", "1.0763509327694490247"),
    15: ("1.0333224614072573348", "1.0344230890647444796"),
    31: ("1.0161277190328587378", "1.0163865733813064088"),
}
FLIP = "3.1135745244678549301"


def _report(line, started, budget_s):
    elapsed = time.perf_counter() - started
    assert elapsed < 10 * budget_s, f"runtime {elapsed:.1f}s blew the {budget_s}s expectation"
    print(f"ACCEPTANCE {line}: PASS ({elapsed:.2f}s)")


def test_criterion_1_table_reproduction_exact():
    started = time.perf_counter()
    rows = verify.suite_table1()
    assert len(rows) == 30
    failed = [r for r in rows if not r.passed]
    assert not failed, failed
    compute = {
        "a": count_acyclic,
        "h_r2": lambda n: smallcover_simplexpower_classes(n, 2),
        "h_r3": lambda n: smallcover_simplexpower_classes(n, 3),
        "h_r4": lambda n: smallcover_simplexpower_classes(n, 4),
        "b": count_bicolored,
    }
    for seq, row in TABLE.items():
        for n, want in row.items():
            assert compute[seq](n) == want
    _report("criterion 1 (published table, 30 exact integers)", started, 1)


def test_criterion_2_constants_to_published_digits():
    # The published strings are correctly rounded 19-digit prints, not
    # truncations, so agreement is asserted to 1 ulp = 1e-19.  The
    # computation itself carries 25 digits.
    started = time.perf_counter()
    ulp = Decimal("1E-19")
    ctx = PrecisionContext(target_digits=25)
    with localcontext(ctx.context()):
        for k, (omega_str, lambda_str) in CONSTANTS.items():
            root = find_least_root(k, ctx)
            assert root.precision_digits == 25
            assert abs(root.omega - Decimal(omega_str)) <= ulp, f"omega k={k}"
            assert abs(root.lam - Decimal(lambda_str)) <= ulp, f"lambda k={k}"
        assert abs(psi_at_negated_root(ctx) - Decimal(FLIP)) <= ulp
    _report("criterion 2 (11 constants vs published 19-digit strings, 1 ulp)", started, 5)


def test_criterion_3_oracle_equivalence():
    started = time.perf_counter()
    for n in range(6):
        assert brute_count(n, 1) == list(arc_enumerator(n).coeffs), f"n={n}"
    tally = brute_count(4, 3)
    assert sum(tally) == 63487
    assert tally == list(multi_arc_enumerator(4, 3).coeffs)
    for n in range(6):
        for k in (1, 3, 7, 15):
            assert brute_count_weighted(n, k) == eval_at_k(n, k), f"n={n} k={k}"
    for n in range(5):
        assert brute_count_bicolored(n) == count_bicolored(n), f"n={n}"
    _report("criterion 3 (brute-force enumeration equals recurrences)", started, 120)


def test_criterion_4_series_identities_exact():
    started = time.perf_counter()
    order = 12
    a = from_sequence({n: count_acyclic(n) for n in range(order + 1)}, 1, 1, order)
    assert verify_identity(multiply(psi_series(1, order), a), unit(order, 1)).equal
    for k in (1, 3, 7, 15):
        counts_k = from_sequence({n: eval_at_k(n, k) for n in range(order + 1)},
                                 k, 1, order)
        assert verify_identity(reciprocal(psi_series(k, order)), counts_k).equal, f"k={k}"
    psi1 = psi_series(1, order)
    b = from_sequence({n: count_bicolored(n) for n in range(order + 1)}, 1, 1, order)
    assert verify_identity(multiply(b, psi1), psi1.negate_argument()).equal
    _report("criterion 4 (series identities, exact rationals to order 12)", started, 1)


def test_criterion_5_derivative_identity():
    started = time.perf_counter()
    tol = Decimal("1E-25")
    for k in (1, 3, 7, 15, 31):
        with localcontext(DEFAULT_PRECISION.context()):
            for j in range(1, 21):
                termwise, identity = _derivative_routes(k, Decimal(j) / 10,
                                                        DEFAULT_PRECISION)
                assert abs(termwise - identity) < tol, f"k={k} z={j/10}"
    _report("criterion 5 (derivative identity, 20 points x 5 k, 25 digits)", started, 2)


def test_criterion_6_cube_class_integrality():
    started = time.perf_counter()
    values = [smallcover_cube_classes(n) for n in range(1, 13)]  # raises if inexact
    assert values[:3] == [1, 6, 259]
    _report("criterion 6 (cube class quotient integral for n=1..12)", started, 1)


def test_criterion_7_asymptotic_convergence():
    started = time.perf_counter()
    for sequence, parameter, n_far, n_near in (("a", None, 20, 10),
                                               ("b", None, 12, 6),
                                               ("h", 2, 12, 6)):
        report = convergence_report(sequence, n_far, parameter)
        assert all(row.ratio > 0 for row in report)
        far = abs(report[n_far - 1].ratio - 1)
        near = abs(report[n_near - 1].ratio - 1)
        assert far < near, f"{sequence}: {far} !< {near}"
    _report("criterion 7 (exact/estimate ratio improves with n)", started, 10)


def test_criterion_8_cross_convention_sanity():
    started = time.perf_counter()
    for n in range(13):
        for k in (1, 3, 7, 15, 31):
            assert arc_enumerator(n).evaluate(k) == eval_at_k(n, k), f"n={n} k={k}"
    for n in range(11):
        for k in (1, 2, 3):
            assert multi_arc_enumerator(n, k).evaluate(1) == eval_at_k(n, k), f"n={n} k={k}"
    _report("criterion 8 (two-path evaluation agreement)", started, 5)
