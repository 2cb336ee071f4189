"""High-precision constants and asymptotic estimates for acyclic counts.

The alternating graphic series converges everywhere; its least positive
root governs the growth of the count sequences.  This module evaluates
the series, locates that root, and forms asymptotic estimates, all in
stdlib ``decimal`` arithmetic.

Precision discipline: every public entry point runs inside a
``decimal.localcontext`` derived from an immutable ``PrecisionContext``,
at ``target_digits + guard_digits`` working precision.  No global
decimal state is read or mutated, so concurrent callers with different
precisions cannot interfere.  Inputs are accepted as int, str, Decimal
or Fraction; floats are rejected because their binary noise defeats the
point of the guard digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import counts

_SCAN_LO = Decimal(1)
_SCAN_HI = Decimal("1.6")
_SCAN_STEP = Decimal("0.05")
_HALF = Decimal("0.5")


class RootBracketError(RuntimeError):
    """No sign change found while scanning for the least positive root."""


@dataclass(frozen=True)
class PrecisionContext:
    """Requested output precision plus guard digits for internal work."""

    target_digits: int = 25
    guard_digits: int = 20
    max_terms: int = 500

    def __post_init__(self) -> None:
        if self.target_digits < 1:
            raise ValueError("target_digits must be at least 1")
        if self.guard_digits < 10:
            raise ValueError("guard_digits must be at least 10")
        if self.max_terms < 50:
            raise ValueError("max_terms must be at least 50")

    @property
    def working_digits(self) -> int:
        return self.target_digits + self.guard_digits

    def context(self) -> Context:
        return Context(prec=self.working_digits)


DEFAULT_PRECISION = PrecisionContext()


@dataclass(frozen=True)
class RootResult:
    """Least positive root of the graphic series and its growth constant."""

    k: int
    omega: Decimal
    lam: Decimal
    precision_digits: int
    residual: Decimal


def _to_decimal(z) -> Decimal:
    """Convert under the *current* decimal context."""
    if isinstance(z, Decimal):
        return +z
    if isinstance(z, bool):
        raise ValueError("z must be numeric, got a bool")
    if isinstance(z, int):
        return Decimal(z)
    if isinstance(z, str):
        return +Decimal(z)
    if isinstance(z, Fraction):
        return Decimal(z.numerator) / Decimal(z.denominator)
    raise ValueError(f"unsupported numeric type {type(z).__name__}; pass int, str, Decimal or Fraction")


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")


def eval_psi(k: int, z, ctx: PrecisionContext = DEFAULT_PRECISION) -> Decimal:
    """Value of sum_n (-1)^n z^n / (n! (1+k)^C(n,2)).

    Terms are generated by the ratio recurrence and summation stops once
    a geometric tail bound drops below the working epsilon: as soon as
    consecutive-term ratios fall under 1/2 the tail is at most twice the
    next term.
    """
    _check_k(k)
    with localcontext(ctx.context()):
        zd = _to_decimal(z)
        if abs(zd) > 4:
            raise ValueError(f"|z| must be at most 4, got {zd}")
        base = Decimal(1 + k)
        eps = Decimal(1).scaleb(-ctx.working_digits)
        total = Decimal(1)
        term = Decimal(1)
        power = Decimal(1)  # (1+k)^(n-1) while processing term n
        n = 0
        while True:
            n += 1
            if n > ctx.max_terms:
                raise RuntimeError(f"series did not converge within {ctx.max_terms} terms")
            term = -term * zd / (n * power)
            total += term
            power *= base
            ratio = abs(zd) / ((n + 1) * power)
            if ratio <= _HALF and 2 * abs(term) * ratio < eps:
                return +total


def _derivative_routes(k: int, z, ctx: PrecisionContext) -> tuple[Decimal, Decimal]:
    """Termwise derivative and the rescaling identity
    d/dz psi(k, z) = -psi(k, z / (1+k)), both at working precision."""
    with localcontext(ctx.context()):
        zd = _to_decimal(z)
        if abs(zd) > 4:
            raise ValueError(f"|z| must be at most 4, got {zd}")
        base = Decimal(1 + k)
        eps = Decimal(1).scaleb(-ctx.working_digits)
        term = Decimal(-1)
        total = Decimal(-1)
        power = base  # (1+k)^n while processing term n+1
        n = 1
        while True:
            n += 1
            if n > ctx.max_terms:
                raise RuntimeError(f"series did not converge within {ctx.max_terms} terms")
            term = -term * zd / ((n - 1) * power)
            total += term
            power *= base
            ratio = abs(zd) / (n * power)
            if ratio <= _HALF and 2 * abs(term) * ratio < eps:
                break
        identity = -eval_psi(k, zd / base, ctx)
        return +total, identity


def eval_psi_derivative(k: int, z, ctx: PrecisionContext = DEFAULT_PRECISION) -> Decimal:
    """Derivative of the graphic series in z.

    Computed twice, termwise and through the rescaling identity; the two
    must agree to the target precision or the call fails outright.
    """
    _check_k(k)
    termwise, identity = _derivative_routes(k, z, ctx)
    with localcontext(ctx.context()):
        if abs(termwise - identity) >= Decimal(1).scaleb(-ctx.target_digits):
            raise RuntimeError(
                f"derivative routes disagree at k={k}, z={z}: {termwise} vs {identity}"
            )
    return termwise


def find_least_root(k: int, ctx: PrecisionContext = DEFAULT_PRECISION) -> RootResult:
    """Least positive root of the graphic series for multiplicity k.

    A fixed-step sign scan over [1, 1.6] brackets the root, bisection
    tightens the bracket, and Newton iterations finish it off.  The
    returned residual is |psi| at the root, re-evaluated from scratch.
    """
    _check_k(k)
    with localcontext(ctx.context()):
        lo = hi = None
        x = _SCAN_LO
        f_prev = eval_psi(k, x, ctx)
        while x < _SCAN_HI:
            x_next = x + _SCAN_STEP
            f_next = eval_psi(k, x_next, ctx)
            if f_prev > 0 and f_next <= 0:
                lo, hi = x, x_next
                break
            x, f_prev = x_next, f_next
        if lo is None:
            raise RootBracketError(f"no sign change in [{_SCAN_LO}, {_SCAN_HI}] for k={k}")

        for _ in range(10):
            mid = (lo + hi) / 2
            if eval_psi(k, mid, ctx) > 0:
                lo = mid
            else:
                hi = mid

        tol = Decimal(1).scaleb(-(ctx.target_digits + ctx.guard_digits // 2))
        root = (lo + hi) / 2
        for _ in range(100):
            step = eval_psi(k, root, ctx) / eval_psi_derivative(k, root, ctx)
            root -= step
            if abs(step) < tol:
                break
        else:
            raise RuntimeError(f"root refinement did not converge for k={k}")

        residual = abs(eval_psi(k, root, ctx))
        if residual >= Decimal(1).scaleb(-ctx.target_digits):
            raise RuntimeError(f"root residual {residual} too large for k={k}")
        lam = lambda_constant(k, root, ctx)
        return RootResult(k=k, omega=+root, lam=lam,
                          precision_digits=ctx.target_digits, residual=residual)


def lambda_constant(k: int, omega, ctx: PrecisionContext = DEFAULT_PRECISION) -> Decimal:
    """Growth constant -1 / (omega * psi'(k, omega)) at a located root."""
    _check_k(k)
    with localcontext(ctx.context()):
        om = _to_decimal(omega)
        deriv = eval_psi_derivative(k, om, ctx)
        if deriv == 0:
            raise RuntimeError(f"derivative vanishes at omega={om} for k={k}")
        return -1 / (om * deriv)


@lru_cache(maxsize=None)
def _cached_root(k: int, ctx: PrecisionContext) -> RootResult:
    return find_least_root(k, ctx)


@lru_cache(maxsize=None)
def _cached_flip_factor(ctx: PrecisionContext) -> Decimal:
    # psi evaluated at the negated simple-digraph root: the constant
    # relating bicolored counts to plain acyclic counts.
    root = _cached_root(1, ctx)
    with localcontext(ctx.context()):
        return eval_psi(1, -root.omega, ctx)


def psi_at_negated_root(ctx: PrecisionContext = DEFAULT_PRECISION) -> Decimal:
    """psi(1, -omega_1): the bicolored-to-acyclic limit ratio b_n / a_n."""
    return _cached_flip_factor(ctx)


_ESTIMATE_TAGS = ("a", "b", "h")


def asymptotic_estimate(sequence: str, n: int, parameter: int | None = None,
                        ctx: PrecisionContext = DEFAULT_PRECISION) -> Decimal:
    """Leading-order estimate lam * n! * (1+k)^C(n,2) / omega^n of the
    named count sequence at order n (times the flip factor for b)."""
    if sequence not in _ESTIMATE_TAGS:
        raise ValueError(f"unknown sequence tag {sequence!r}; expected one of {_ESTIMATE_TAGS}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    if sequence == "h":
        if not isinstance(parameter, int) or isinstance(parameter, bool) or parameter < 1:
            raise ValueError(f"sequence 'h' needs a positive int parameter r, got {parameter!r}")
        k = 2**parameter - 1
    else:
        if parameter is not None:
            raise ValueError(f"sequence {sequence!r} takes no parameter")
        k = 1
    root = _cached_root(k, ctx)
    with localcontext(ctx.context()):
        est = root.lam * Decimal(factorial(n) * (1 + k) ** comb(n, 2)) / root.omega**n
        if sequence == "b":
            est *= _cached_flip_factor(ctx)
        return +est


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    exact: int
    estimate: Decimal
    ratio: Decimal


_EXACT_FUNCS = {
    "a": lambda n, p: counts.count_acyclic(n),
    "b": lambda n, p: counts.count_bicolored(n),
    "h": lambda n, p: counts.smallcover_simplexpower_classes(n, p),
}


def convergence_report(sequence: str, n_max: int, parameter: int | None = None,
                       ctx: PrecisionContext = DEFAULT_PRECISION) -> list[ConvergenceRow]:
    """Exact values, estimates and exact/estimate ratios for n = 1..n_max."""
    if sequence not in _ESTIMATE_TAGS:
        raise ValueError(f"unknown sequence tag {sequence!r}; expected one of {_ESTIMATE_TAGS}")
    rows = []
    for n in range(1, n_max + 1):
        exact = _EXACT_FUNCS[sequence](n, parameter)
        est = asymptotic_estimate(sequence, n, parameter, ctx)
        with localcontext(ctx.context()):
            ratio = +(Decimal(exact) / est)
        rows.append(ConvergenceRow(n, exact, est, ratio))
    return rows


def format_decimal(value: Decimal, digits: int) -> str:
    """Render with exactly ``digits`` digits after the point, correctly
    rounded (half-even)."""
    if digits < 1:
        raise ValueError("digits must be at least 1")
    quantum = Decimal(1).scaleb(-digits)
    ctx = Context(prec=digits + 12)
    return str(value.quantize(quantum, rounding=ROUND_HALF_EVEN, context=ctx))
