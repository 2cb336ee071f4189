"""Brute-force enumeration oracle for small orders.

Everything here certifies the recurrence-based counts by literally
enumerating candidate adjacency matrices.  Candidates are indexed by an
odometer over the off-diagonal entries (row-major positions, last
position fastest), so any failure is reproducible from its index and
results are independent of how the index space is partitioned.

Two interchangeable backends implement the hot loops: jitted kernels
(``numba``) and vectorized batch kernels (``numpy``).  Selection order:
the ``backend`` argument if given, else the ``ACYCLIC_CENSUS_BACKEND``
environment variable (``numba`` or ``numpy``), else numba when it
imports and numpy otherwise.

Every enumeration is guarded by an explicit budget on the number of
candidate matrices (default 10**8) and refuses to start past it,
reporting the budget that would be required.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Literal

import numpy as np

from . import _kernels_numpy
from .counts import _check_multiplicity, _check_order

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 16

BACKENDS = ("numba", "numpy")


class EnumerationBudgetError(RuntimeError):
    """Enumeration refused: the candidate space exceeds the budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration needs {required} candidates but the budget is {budget}"
        )
        self.required = required
        self.budget = budget


def _load_backend(name: str | None):
    if name is None:
        name = os.environ.get("ACYCLIC_CENSUS_BACKEND", "").strip() or None
    if name is None:
        try:
            from . import _kernels_numba
            return _kernels_numba
        except ImportError:
            return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba
        return _kernels_numba
    if name == "numpy":
        return _kernels_numpy
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")


@dataclass(eq=False)
class MultiDigraph:
    """Adjacency matrix with entries 0..k and a zero diagonal.

    Entry (i, j) is the number of parallel arcs from vertex i to
    vertex j; the convention is that a pair carrying multiplicity m
    contributes m arcs.
    """

    n: int
    k: int
    adj: np.ndarray

    def __post_init__(self) -> None:
        _check_order(self.n)
        _check_multiplicity(self.k)
        adj = np.array(self.adj, dtype=np.int64)
        if adj.shape != (self.n, self.n):
            raise ValueError(f"adjacency must be {self.n}x{self.n}, got {adj.shape}")
        if adj.min(initial=0) < 0 or adj.max(initial=0) > self.k:
            raise ValueError(f"adjacency entries must lie in 0..{self.k}")
        if self.n and np.diagonal(adj).any():
            raise ValueError("diagonal must be zero (no loops)")
        adj.setflags(write=False)
        self.adj = adj

    @property
    def arc_count(self) -> int:
        return int(self.adj.sum())

    @classmethod
    def from_index(cls, n: int, k: int, index: int) -> "MultiDigraph":
        """The index-th candidate in enumeration order."""
        _check_order(n)
        _check_multiplicity(k)
        m = n * (n - 1)
        total = (k + 1) ** m
        if not 0 <= index < total:
            raise ValueError(f"index {index} outside [0, {total})")
        adj = np.zeros((n, n), dtype=np.int64)
        rem = index
        for i in range(n - 1, -1, -1):
            for j in range(n - 1, -1, -1):
                if i != j:
                    adj[i, j] = rem % (k + 1)
                    rem //= k + 1
        return cls(n, k, adj)


@dataclass(frozen=True)
class ColoredDigraph:
    """A simple digraph with a red/blue vertex colouring."""

    base: MultiDigraph
    colors: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.base.k != 1:
            raise ValueError("coloured digraphs are simple: base must have k=1")
        if len(self.colors) != self.base.n:
            raise ValueError(f"need {self.base.n} colours, got {len(self.colors)}")
        bad = set(self.colors) - {"red", "blue"}
        if bad:
            raise ValueError(f"colours must be 'red' or 'blue', got {sorted(bad)}")

    def red_vertices_are_sources(self) -> bool:
        indeg = self.base.adj.sum(axis=0)
        return all(indeg[v] == 0 for v, c in enumerate(self.colors) if c == "red")


def is_acyclic(g: MultiDigraph, method: Literal["kahn", "dfs"] = "kahn") -> bool:
    """Whether g has no directed cycle.

    ``kahn`` peels vertices of in-degree zero; ``dfs`` looks for a back
    edge.  The two always agree.
    """
    if method == "kahn":
        return _is_acyclic_kahn(g.adj, g.n)
    if method == "dfs":
        return _is_acyclic_dfs(g.adj, g.n)
    raise ValueError(f"unknown method {method!r}; expected 'kahn' or 'dfs'")


def _is_acyclic_kahn(adj: np.ndarray, n: int) -> bool:
    indeg = [int((adj[:, j] > 0).sum()) for j in range(n)]
    alive = [True] * n
    for _ in range(n):
        v = next((u for u in range(n) if alive[u] and indeg[u] == 0), None)
        if v is None:
            return False
        alive[v] = False
        for w in range(n):
            if alive[w] and adj[v, w] > 0:
                indeg[w] -= 1
    return True


def _is_acyclic_dfs(adj: np.ndarray, n: int) -> bool:
    # colours: 0 unvisited, 1 on the current path, 2 finished
    state = [0] * n
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, 0)]
        state[root] = 1
        while stack:
            v, nxt = stack.pop()
            advanced = False
            for w in range(nxt, n):
                if adj[v, w] > 0:
                    if state[w] == 1:
                        return False
                    if state[w] == 0:
                        stack.append((v, w + 1))
                        state[w] = 1
                        stack.append((w, 0))
                        advanced = True
                        break
            if not advanced:
                state[v] = 2
    return True


def _check_budget(required: int, budget: int | None) -> int:
    budget = DEFAULT_BUDGET if budget is None else budget
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 1:
        raise ValueError(f"budget must be a positive int, got {budget!r}")
    if required > budget:
        raise EnumerationBudgetError(required, budget)
    return budget


def _chunks(total: int):
    for start in range(0, total, _CHUNK):
        yield start, min(start + _CHUNK, total)


def brute_count(n: int, k: int, budget: int | None = None,
                backend: str | None = None) -> list[int]:
    """Tally acyclic digraphs on n vertices by total arc multiplicity,
    enumerating all (k+1)^(n(n-1)) candidate matrices.

    The returned list has length k*C(n,2)+1 and equals the coefficient
    list of ``multi_arc_enumerator(n, k)``.
    """
    _check_order(n)
    _check_multiplicity(k)
    total = (k + 1) ** (n * (n - 1))
    _check_budget(total, budget)
    kernels = _load_backend(backend)
    tally = np.zeros(k * comb(n, 2) + 1, dtype=np.int64)
    for start, stop in _chunks(total):
        kernels.tally_by_arcs(n, k, start, stop, tally)
    return [int(c) for c in tally]


def brute_count_weighted(n: int, weight: int, budget: int | None = None,
                         backend: str | None = None) -> int:
    """Sum weight^(out-degree sum) over all simple acyclic digraphs on
    n vertices; equals ``eval_at_k(n, weight)``.

    Only the 2^(n(n-1)) simple candidates are enumerated; the weighting
    is applied in exact integer arithmetic afterwards.
    """
    _check_order(n)
    _check_multiplicity(weight)
    total = 2 ** (n * (n - 1))
    _check_budget(total, budget)
    kernels = _load_backend(backend)
    tally = np.zeros(comb(n, 2) + 1, dtype=np.int64)
    for start, stop in _chunks(total):
        kernels.tally_by_outdegree_sum(n, start, stop, tally)
    return sum(int(c) * weight**s for s, c in enumerate(tally))


def brute_count_bicolored(n: int, budget: int | None = None,
                          backend: str | None = None) -> int:
    """Count pairs (red/blue colouring, simple acyclic digraph) in which
    every red vertex is a source, by enumerating all pairs.

    The budget covers the full pair space, 2^n * 2^(n(n-1)).
    """
    _check_order(n)
    total_graphs = 2 ** (n * (n - 1))
    _check_budget(total_graphs * 2**n, budget)
    kernels = _load_backend(backend)
    count = 0
    for start, stop in _chunks(total_graphs):
        count += int(kernels.count_bicolored_pairs(n, start, stop))
    return count
