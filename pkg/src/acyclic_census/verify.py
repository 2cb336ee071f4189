"""Named self-check suites tying the independent computation paths together.

Each suite returns a list of ``CheckResult`` rows, one per check, never
raising on a mere mismatch: a failed row carries the counterexample in
its detail string.  The published reference values live here as frozen
fixtures; everything else is recomputed on the spot.

Suites: ``table1`` (recurrences against the published integer table),
``series`` (exact rational identities), ``constants`` (located roots
against the published digit strings), ``asymptotics`` (derivative
cross-checks and convergence of exact/estimate ratios) and ``oracle``
(brute-force enumeration against the recurrences).  ``all`` runs them
all in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext

from . import asymptotics, counts, oracle, series

PUBLISHED_COUNTS: dict[str, dict[int, int]] = {
    "a": {1: 1, 2: 3, 3: 25, 4: 543, 5: 29281, 6: 3781503},
    "h_r2": {1: 1, 2: 7, 3: 289, 4: 63487, 5: 69711361, 6: 367404658687},
    "h_r3": {1: 1, 2: 15, 3: 2689, 4: 5140479, 5: 98267258881, 6: 18033699790913535},
    "h_r4": {1: 1, 2: 31, 3: 23041, 4: 365330431, 5: 115851037900801,
             6: 705367139018659069951},
    "b": {1: 2, 2: 8, 3: 74, 4: 1664, 5: 90722, 6: 11756288},
}

# 19 digits after the point, as published; agreement is checked to 1 ulp.
PUBLISHED_CONSTANTS: dict[int, tuple[str, str]] = {
    1: ("1.4880785455997102947", "1.7410611252932298403"),
    3: ("1.1657706116147275128", "1.1928652399365987835"),
    7: ("1.0713348333900423361", "1.0763509327694490247"),
    15: ("1.0333224614072573348", "1.0344230890647444796"),
    31: ("1.0161277190328587378", "1.0163865733813064088"),
}

PUBLISHED_FLIP_FACTOR = "3.1135745244678549301"

PUBLISHED_ULP = Decimal("1E-19")

SUITES = ("table1", "series", "constants", "asymptotics", "oracle", "all")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _row(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), "" if passed else detail)


def suite_table1() -> list[CheckResult]:
    """Recompute every entry of the published value table: 30 checks."""
    rows = []
    compute = {
        "a": counts.count_acyclic,
        "h_r2": lambda n: counts.smallcover_simplexpower_classes(n, 2),
        "h_r3": lambda n: counts.smallcover_simplexpower_classes(n, 3),
        "h_r4": lambda n: counts.smallcover_simplexpower_classes(n, 4),
        "b": counts.count_bicolored,
    }
    for seq, expected in PUBLISHED_COUNTS.items():
        fn = compute[seq]
        for n, want in expected.items():
            got = fn(n)
            rows.append(_row(f"{seq}_n{n}", got == want, f"expected {want}, computed {got}"))
    return rows


def suite_series(order: int = 12) -> list[CheckResult]:
    """Exact rational series identities through the given order."""
    rows = []

    f = series.psi_series(2, order)
    check = series.verify_identity(series.multiply(f, series.reciprocal(f)),
                                   series.unit(order, 2))
    rows.append(_row("unit_roundtrip", check.equal, _mismatch(check)))

    a_series = series.from_sequence(
        {n: counts.count_acyclic(n) for n in range(order + 1)}, 1, 1, order)
    check = series.verify_identity(series.multiply(series.psi_series(1, order), a_series),
                                   series.unit(order, 1))
    rows.append(_row("psi_times_counts_is_unit_k1", check.equal, _mismatch(check)))

    for k in (1, 3, 7, 15):
        counts_series = series.from_sequence(
            {n: counts.eval_at_k(n, k) for n in range(order + 1)}, k, 1, order)
        check = series.verify_identity(series.reciprocal(series.psi_series(k, order)),
                                       counts_series)
        rows.append(_row(f"reciprocal_matches_counts_k{k}", check.equal, _mismatch(check)))

    psi1 = series.psi_series(1, order)
    b_series = series.from_sequence(
        {n: counts.count_bicolored(n) for n in range(order + 1)}, 1, 1, order)
    check = series.verify_identity(series.multiply(b_series, psi1), psi1.negate_argument())
    rows.append(_row("bicolored_flip_product", check.equal, _mismatch(check)))

    return rows


def _mismatch(check: series.IdentityCheck) -> str:
    if check.equal:
        return ""
    return (f"first mismatch at order {check.mismatch_index}: "
            f"{check.lhs_value} vs {check.rhs_value}")


def suite_constants(digits: int = 25) -> list[CheckResult]:
    """Root and growth constants against the published digit strings."""
    if digits < 20:
        raise ValueError("digits must be at least 20 to cover the published strings")
    ctx = asymptotics.PrecisionContext(target_digits=digits)
    rows = []
    roots = {k: asymptotics.find_least_root(k, ctx) for k in PUBLISHED_CONSTANTS}

    with localcontext(ctx.context()):
        for k, (omega_str, lambda_str) in PUBLISHED_CONSTANTS.items():
            root = roots[k]
            for name, got, want in ((f"omega_k{k}", root.omega, Decimal(omega_str)),
                                    (f"lambda_k{k}", root.lam, Decimal(lambda_str))):
                rows.append(_row(name, abs(got - want) <= PUBLISHED_ULP,
                                 f"published {want}, computed {got}"))

        flip = asymptotics.psi_at_negated_root(ctx)
        want = Decimal(PUBLISHED_FLIP_FACTOR)
        rows.append(_row("flip_factor", abs(flip - want) <= PUBLISHED_ULP,
                         f"published {want}, computed {flip}"))

        omegas = [roots[k].omega for k in (1, 3, 7, 15, 31)]
        bracket = all(1 < om < Decimal("1.5") for om in omegas)
        decreasing = all(a > b for a, b in zip(omegas, omegas[1:]))
        rows.append(_row("family_bracket", bracket and decreasing,
                         f"omegas {omegas} must decrease within (1, 1.5)"))

    wide = asymptotics.PrecisionContext(target_digits=digits + 10)
    stable = True
    detail = ""
    for k in (1, 31):
        redone = asymptotics.find_least_root(k, wide)
        with localcontext(wide.context()):
            drift = abs(redone.omega - roots[k].omega)
            if drift > Decimal(1).scaleb(-digits):
                stable = False
                detail = f"omega_k{k} drifts by {drift} with 10 extra digits"
    rows.append(_row("precision_stability", stable, detail))

    return rows


def suite_asymptotics(ctx: asymptotics.PrecisionContext = asymptotics.DEFAULT_PRECISION
                      ) -> list[CheckResult]:
    """Derivative route agreement and convergence of exact/estimate ratios."""
    rows = []
    tol = Decimal(1).scaleb(-ctx.target_digits)
    for k in (1, 3, 7, 15, 31):
        worst = Decimal(0)
        with localcontext(ctx.context()):
            for j in range(1, 21):
                z = Decimal(j) / 10
                termwise, identity = asymptotics._derivative_routes(k, z, ctx)
                worst = max(worst, abs(termwise - identity))
        rows.append(_row(f"derivative_routes_agree_k{k}", worst < tol,
                         f"max route difference {worst} at k={k}"))

    rows.append(_ratio_row("a", None, 20, 10, ctx))
    rows.append(_ratio_row("b", None, 12, 6, ctx))
    rows.append(_ratio_row("h", 2, 12, 6, ctx))

    report = asymptotics.convergence_report("h", 8, 3, ctx)
    gaps = [abs(row.ratio - 1) for row in report]
    monotone = all(row.ratio > 0 for row in report) and all(
        a > b for a, b in zip(gaps, gaps[1:]))
    rows.append(_row("ratio_monotone_h_r3_n8", monotone,
                     f"|ratio-1| not strictly decreasing: {[str(g) for g in gaps]}"))
    return rows


def _ratio_row(sequence: str, parameter: int | None, n_far: int, n_near: int,
               ctx: asymptotics.PrecisionContext) -> CheckResult:
    report = asymptotics.convergence_report(sequence, n_far, parameter, ctx)
    positive = all(row.ratio > 0 for row in report)
    far = abs(report[n_far - 1].ratio - 1)
    near = abs(report[n_near - 1].ratio - 1)
    tag = sequence if parameter is None else f"{sequence}_r{parameter}"
    return _row(f"ratio_improves_{tag}_n{n_far}_vs_n{n_near}",
                positive and far < near,
                f"|ratio-1| is {near} at n={n_near} but {far} at n={n_far}")


def suite_oracle(budget: int | None = None, backend: str | None = None) -> list[CheckResult]:
    """Brute-force enumeration against every recurrence-based count."""
    rows = []

    for n in range(1, 6):
        got = oracle.brute_count(n, 1, budget, backend)
        want = list(counts.arc_enumerator(n).coeffs)
        rows.append(_row(f"arc_tally_n{n}", got == want,
                         f"expected {want}, enumerated {got}"))

    for n in range(1, 5):
        got = oracle.brute_count(n, 3, budget, backend)
        want = list(counts.multi_arc_enumerator(n, 3).coeffs)
        rows.append(_row(f"multiplicity_tally_k3_n{n}",
                         got == want and sum(got) == counts.eval_at_k(n, 3),
                         f"expected {want}, enumerated {got}"))

    for k in (1, 3, 7, 15):
        bad = ""
        for n in range(6):
            got = oracle.brute_count_weighted(n, k, budget, backend)
            want = counts.eval_at_k(n, k)
            if got != want:
                bad = f"n={n}: expected {want}, enumerated {got}"
                break
        rows.append(_row(f"weighted_matches_counts_k{k}", not bad, bad))

    for n in range(5):
        got = oracle.brute_count_bicolored(n, budget, backend)
        want = counts.count_bicolored(n)
        rows.append(_row(f"bicolored_n{n}", got == want,
                         f"expected {want}, enumerated {got}"))

    bad = ""
    for n in range(5):
        for index in range(2 ** (n * (n - 1))):
            g = oracle.MultiDigraph.from_index(n, 1, index)
            if oracle.is_acyclic(g, "kahn") != oracle.is_acyclic(g, "dfs"):
                bad = f"procedures disagree at n={n}, index={index}"
                break
        if bad:
            break
    rows.append(_row("decision_procedures_agree", not bad, bad))

    bad = ""
    for index in range(0, 2**12, 17):
        g = oracle.MultiDigraph.from_index(4, 1, index)
        if oracle.is_acyclic(g) and not (g.adj.sum(axis=0) == 0).any():
            bad = f"acyclic digraph without a source at index {index}"
            break
    rows.append(_row("acyclic_has_source_sampled", not bad, bad))

    return rows


def run_suite(name: str, *, order: int = 12, digits: int = 25,
              budget: int | None = None, backend: str | None = None,
              ) -> list[CheckResult]:
    """Run one named suite (or ``all``) and return its check rows."""
    if name == "table1":
        return suite_table1()
    if name == "series":
        return suite_series(order)
    if name == "constants":
        return suite_constants(digits)
    if name == "asymptotics":
        return suite_asymptotics()
    if name == "oracle":
        return suite_oracle(budget, backend)
    if name == "all":
        rows = []
        for sub in ("table1", "series", "constants", "asymptotics", "oracle"):
            rows.extend(run_suite(sub, order=order, digits=digits,
                                  budget=budget, backend=backend))
        return rows
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
