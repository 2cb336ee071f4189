"""Exact counting of labelled acyclic digraphs and variants.

Everything in this module is exact integer (or integer-polynomial)
arithmetic.  The counts come from classical alternating recurrences
indexed by the set of source vertices; they are memoized in
growth-on-demand tables keyed by the arc multiplicity bound ``k``, so
higher orders reuse all lower orders already computed.  Tables are
guarded by a lock: concurrent readers are safe, writers are serialized.

Conventions:

* ``k`` bounds how many parallel arcs an ordered vertex pair may carry;
  ``k = 1`` is the simple-digraph case.
* An arc enumerator of order ``n`` is a dense polynomial whose
  coefficient of ``x**m`` counts acyclic digraphs with exactly ``m``
  arcs (arcs counted with multiplicity).
* ``n`` is capped by the assignable module attribute ``ORDER_CAP``
  (default 200) to bound table growth; exceeding it raises
  ``ValueError``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import comb, factorial, prod

ORDER_CAP = 200

SEQUENCE_NAMES = ("a", "b", "h", "cube", "Ak")

_lock = threading.Lock()
_value_tables: dict[int, list[int]] = {}
_poly_tables: dict[int, list[tuple[int, ...]]] = {}


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"order must be an int, got {n!r}")
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    if n > ORDER_CAP:
        raise ValueError(f"order {n} exceeds ORDER_CAP={ORDER_CAP}")


def _check_multiplicity(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"arc multiplicity bound must be a positive int, got {k!r}")


@dataclass(frozen=True)
class ArcPolynomial:
    """Arc enumerator: ``coeffs[m]`` counts acyclic digraphs with m arcs."""

    n: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: int) -> int:
        """Evaluate at an integer point by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _bundle_power(k: int, e: int) -> list[int]:
    """Coefficients of (1 + x + ... + x**k) ** e."""
    if e == 0:
        return [1]
    if k == 1:
        return [comb(e, j) for j in range(e + 1)]
    base = [1] * (k + 1)
    acc = [1]
    while e:
        if e & 1:
            acc = _poly_mul(acc, base)
        e >>= 1
        if e:
            base = _poly_mul(base, base)
    return acc


def _values_upto(n: int, k: int) -> list[int]:
    # Alternating recurrence over the t vertices that are not sources:
    # A_m = sum_t C(m, t) * (-1)^(m-t-1) * (1+k)^(t*(m-t)) * A_t.
    with _lock:
        tab = _value_tables.setdefault(k, [1])
        base = 1 + k
        while len(tab) <= n:
            m = len(tab)
            tab.append(
                sum(
                    comb(m, t) * (-1) ** (m - t - 1) * base ** (t * (m - t)) * tab[t]
                    for t in range(m)
                )
            )
        return tab


def _polys_upto(n: int, k: int) -> list[tuple[int, ...]]:
    # Same recurrence with (1+k) replaced by the bundle polynomial
    # (1 + x + ... + x**k), tracking arc counts exactly.
    with _lock:
        tab = _poly_tables.setdefault(k, [(1,)])
        while len(tab) <= n:
            m = len(tab)
            acc = [0] * (k * comb(m, 2) + 1)
            for t in range(m):
                term = _poly_mul(_bundle_power(k, t * (m - t)), list(tab[t]))
                sign = comb(m, t) * (-1) ** (m - t - 1)
                for i, c in enumerate(term):
                    acc[i] += sign * c
            tab.append(tuple(acc))
        return tab


def count_acyclic(n: int) -> int:
    """Number of labelled acyclic digraphs on n vertices."""
    _check_order(n)
    return _values_upto(n, 1)[n]


def eval_at_k(n: int, k: int) -> int:
    """Number of labelled acyclic digraphs on n vertices when every
    ordered pair may carry up to k parallel arcs.

    Computed by the direct integer recurrence; agrees with evaluating
    ``multi_arc_enumerator(n, k)`` at 1 (and, for the h-sequences, with
    ``arc_enumerator(n).evaluate(k)``).
    """
    _check_order(n)
    _check_multiplicity(k)
    return _values_upto(n, k)[n]


def arc_enumerator(n: int) -> ArcPolynomial:
    """Arc enumerator of simple acyclic digraphs on n vertices."""
    _check_order(n)
    return ArcPolynomial(n, _polys_upto(n, 1)[n])


def multi_arc_enumerator(n: int, k: int) -> ArcPolynomial:
    """Arc enumerator of acyclic digraphs with up to k parallel arcs."""
    _check_order(n)
    _check_multiplicity(k)
    return ArcPolynomial(n, _polys_upto(n, k)[n])


def count_bicolored(n: int) -> int:
    """Number of pairs (red/blue colouring, acyclic digraph) on n
    labelled vertices in which every red vertex is a source.

    Satisfies b_n = sum_t C(n, t) * 2^(t*(n-t)) * a_t with all signs
    positive, the red vertices being the n-t sources picked.
    """
    _check_order(n)
    tab = _values_upto(n, 1)
    return sum(comb(n, t) * 2 ** (t * (n - t)) * tab[t] for t in range(n + 1))


def smallcover_simplexpower_classes(n: int, r: int) -> int:
    """Number of weak equivalence classes of small covers over the
    n-fold power of the r-simplex; equals the multidigraph count at
    multiplicity 2**r - 1.
    """
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"simplex dimension must be a positive int, got {r!r}")
    return eval_at_k(n, 2**r - 1)


def smallcover_cube_classes(n: int) -> int:
    """Number of equivariant diffeomorphism classes of small covers over
    the n-cube.

    The quotient b_n * prod_{i<n} (2^n - 2^i) / (n! * 2^n) is exact for
    every order checked; a remainder would be an internal error.
    """
    _check_order(n)
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    numerator = count_bicolored(n) * prod(2**n - 2**i for i in range(n))
    q, rem = divmod(numerator, factorial(n) * 2**n)
    if rem:
        raise ArithmeticError(f"cube class count is not integral at n={n}")
    return q


@dataclass
class SequenceTable:
    """Named table of exact sequence values, keyed by order.

    ``name`` is one of ``SEQUENCE_NAMES``: a (simple acyclic counts),
    b (source-coloured pair counts), h (simplex-power small covers,
    parameter r), cube (cube small covers) and Ak (multidigraph counts,
    parameter k).  Every stored value is reproducible from scratch by
    the corresponding counting function; ``recompute_mismatches`` does
    exactly that.
    """

    name: str
    parameter: int | None = None
    values: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.name not in SEQUENCE_NAMES:
            raise ValueError(f"unknown sequence name {self.name!r}")
        if self.name in ("h", "Ak"):
            if self.parameter is None:
                raise ValueError(f"sequence {self.name!r} needs a parameter")
        elif self.parameter is not None:
            raise ValueError(f"sequence {self.name!r} takes no parameter")

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    @property
    def key(self) -> str:
        if self.parameter is None:
            return self.name
        return f"{self.name}:{self.parameter}"

    def recompute_mismatches(self) -> list[int]:
        """Orders whose stored value disagrees with a fresh computation."""
        fn = _SEQUENCE_FUNCS[self.name]
        bad = []
        for n, v in self.values.items():
            fresh = fn(n) if self.parameter is None else fn(n, self.parameter)
            if fresh != v:
                bad.append(n)
        return sorted(bad)

    def to_json_dict(self) -> dict:
        d: dict = {"name": self.name, "values": {str(n): str(v) for n, v in sorted(self.values.items())}}
        if self.parameter is not None:
            d["parameter"] = self.parameter
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "SequenceTable":
        return cls(
            name=d["name"],
            parameter=d.get("parameter"),
            values={int(n): int(v) for n, v in d["values"].items()},
        )


_SEQUENCE_FUNCS = {
    "a": count_acyclic,
    "b": count_bicolored,
    "h": smallcover_simplexpower_classes,
    "cube": smallcover_cube_classes,
    "Ak": eval_at_k,
}

_STARTS = {"a": 0, "b": 0, "h": 1, "cube": 1, "Ak": 0}


def sequence_table(name: str, n_max: int, parameter: int | None = None) -> SequenceTable:
    """Compute the named sequence for all orders up to n_max.

    Sequences a, b and Ak start at order 0; h and cube start at 1.
    """
    table = SequenceTable(name, parameter)
    fn = _SEQUENCE_FUNCS[name]
    for n in range(_STARTS[name], n_max + 1):
        table.values[n] = fn(n) if parameter is None else fn(n, parameter)
    return table
