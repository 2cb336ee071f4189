"""Vectorized enumeration kernels: the pure-numpy backend.

Each kernel processes a contiguous slice [start, stop) of the odometer
index space over off-diagonal adjacency entries (row-major positions,
last position fastest), decoding a whole slice into a stacked batch of
adjacency matrices and testing acyclicity by repeated source removal on
the batch at once.
"""

from __future__ import annotations

import numpy as np


def _offdiag_positions(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    rows = np.array([p[0] for p in pairs], dtype=np.int64)
    cols = np.array([p[1] for p in pairs], dtype=np.int64)
    return rows, cols


def _decode(start: int, stop: int, m: int, base: int) -> np.ndarray:
    """Digit matrix of shape (stop-start, m), most significant first."""
    idx = np.arange(start, stop, dtype=np.int64)
    powers = base ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % base


def _batch_adjacency(digits: np.ndarray, n: int) -> np.ndarray:
    rows, cols = _offdiag_positions(n)
    adj = np.zeros((digits.shape[0], n, n), dtype=np.int64)
    adj[:, rows, cols] = digits
    return adj


def acyclic_mask(adj: np.ndarray) -> np.ndarray:
    """Boolean mask over a batch (B, n, n): True where no directed cycle.

    Peels all current sources of every graph simultaneously; a graph is
    acyclic iff nothing remains after n rounds.
    """
    support = adj > 0
    b, n, _ = adj.shape
    alive = np.ones((b, n), dtype=bool)
    for _ in range(n):
        indeg = (support & alive[:, :, None]).sum(axis=1)
        src = alive & (indeg == 0)
        if not src.any():
            break
        alive &= ~src
    return ~alive.any(axis=1)


def tally_by_arcs(n: int, k: int, start: int, stop: int, tally: np.ndarray) -> None:
    """Add to ``tally[m]`` the acyclic candidates in [start, stop) with
    total arc multiplicity m."""
    digits = _decode(start, stop, n * (n - 1), k + 1)
    adj = _batch_adjacency(digits, n)
    mask = acyclic_mask(adj)
    sums = digits.sum(axis=1)
    tally += np.bincount(sums[mask], minlength=tally.size)


def tally_by_outdegree_sum(n: int, start: int, stop: int, tally: np.ndarray) -> None:
    """Add to ``tally[s]`` the simple acyclic candidates in [start, stop)
    whose out-degrees sum to s."""
    digits = _decode(start, stop, n * (n - 1), 2)
    adj = _batch_adjacency(digits, n)
    mask = acyclic_mask(adj)
    outdeg_sum = adj.sum(axis=2).sum(axis=1)
    tally += np.bincount(outdeg_sum[mask], minlength=tally.size)


def count_bicolored_pairs(n: int, start: int, stop: int) -> int:
    """Pairs (red/blue colouring, simple acyclic digraph) with every red
    vertex a source, over graph indices in [start, stop) crossed with
    all 2**n colourings."""
    digits = _decode(start, stop, n * (n - 1), 2)
    adj = _batch_adjacency(digits, n)
    mask = acyclic_mask(adj)
    indeg = adj.sum(axis=1)
    total = 0
    for colour in range(1 << n):
        red = np.array([(colour >> v) & 1 for v in range(n)], dtype=bool)
        if red.any():
            ok = mask & (indeg[:, red] == 0).all(axis=1)
            total += int(ok.sum())
        else:
            total += int(mask.sum())
    return total
