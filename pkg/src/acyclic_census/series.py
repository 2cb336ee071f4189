"""Exact rational series algebra for graphic generating functions.

A graphic series here is a truncated power series whose coefficient of
z^n is (an integer multiple of) 1 / (n! * (1+k)^C(n,2)).  All
coefficients are ``fractions.Fraction`` instances, so every identity
check below is exact; there is no floating point anywhere in this
module.  Series carry their truncation order explicitly and operations
never extrapolate past it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Mapping


@dataclass(frozen=True)
class GraphicSeries:
    """Truncated power series with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]
    k: int | None = None
    label: str = ""

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def negate_argument(self) -> "GraphicSeries":
        """The series f(-z): flips the sign of every odd coefficient."""
        flipped = tuple(c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs))
        return GraphicSeries(flipped, self.k, f"{self.label}(-z)" if self.label else "")

    def integer_weights(self) -> list[int]:
        """Coefficients rescaled by n! * (1+k)^C(n,2), which must be
        integers for any series counting graphs with this weighting."""
        if self.k is None:
            raise ValueError("series has no k; integer weights are undefined")
        out = []
        for n, c in enumerate(self.coeffs):
            w = c * factorial(n) * (1 + self.k) ** comb(n, 2)
            if w.denominator != 1:
                raise ArithmeticError(f"coefficient {n} rescales to non-integer {w}")
            out.append(w.numerator)
        return out


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of comparing two series coefficient by coefficient."""

    equal: bool
    mismatch_index: int | None = None
    lhs_value: Fraction | None = None
    rhs_value: Fraction | None = None

    def __bool__(self) -> bool:
        return self.equal


def psi_series(k: int, order: int) -> GraphicSeries:
    """The alternating graphic series with coefficient
    (-1)^n / (n! * (1+k)^C(n,2)) of z^n, truncated at ``order``.

    Its reciprocal generates the acyclic digraph counts at arc
    multiplicity k.
    """
    _check_k(k)
    _check_order(order)
    coeffs = tuple(
        Fraction((-1) ** n, factorial(n) * (1 + k) ** comb(n, 2))
        for n in range(order + 1)
    )
    return GraphicSeries(coeffs, k, f"psi_{k}")


def from_sequence(values: Mapping[int, int], k: int, sign: int, order: int) -> GraphicSeries:
    """Series with coefficient sign^n * values[n] / (n! * (1+k)^C(n,2)).

    ``values`` must cover every order 0..order (a missing order raises
    ``KeyError``); ``sign`` must be +1 or -1.
    """
    _check_k(k)
    _check_order(order)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    coeffs = tuple(
        Fraction(sign**n * values[n], factorial(n) * (1 + k) ** comb(n, 2))
        for n in range(order + 1)
    )
    return GraphicSeries(coeffs, k)


def multiply(f: GraphicSeries, g: GraphicSeries) -> GraphicSeries:
    """Cauchy product truncated at the common order."""
    _check_same_order(f, g)
    n_max = f.order
    coeffs = tuple(
        sum((f[i] * g[n - i] for i in range(n + 1)), Fraction(0))
        for n in range(n_max + 1)
    )
    return GraphicSeries(coeffs, f.k if f.k == g.k else None)


def reciprocal(f: GraphicSeries) -> GraphicSeries:
    """Series g with f * g = 1 through the truncation order.

    Requires a nonzero constant term.
    """
    if f[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    inv0 = 1 / f[0]
    coeffs: list[Fraction] = [inv0]
    for n in range(1, f.order + 1):
        acc = sum((f[i] * coeffs[n - i] for i in range(1, n + 1)), Fraction(0))
        coeffs.append(-inv0 * acc)
    return GraphicSeries(tuple(coeffs), f.k)


def unit(order: int, k: int | None = None) -> GraphicSeries:
    """The constant series 1 truncated at ``order``."""
    _check_order(order)
    return GraphicSeries((Fraction(1),) + (Fraction(0),) * order, k)


def verify_identity(lhs: GraphicSeries, rhs: GraphicSeries) -> IdentityCheck:
    """Exact coefficientwise comparison; reports the first mismatch."""
    _check_same_order(lhs, rhs)
    for n in range(lhs.order + 1):
        if lhs[n] != rhs[n]:
            return IdentityCheck(False, n, lhs[n], rhs[n])
    return IdentityCheck(True)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")


def _check_order(order: int) -> None:
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ValueError(f"order must be a nonnegative int, got {order!r}")


def _check_same_order(f: GraphicSeries, g: GraphicSeries) -> None:
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} vs {g.order}")
