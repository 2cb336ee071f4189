"""Jitted enumeration kernels: the numba backend.

Same index-slice contract as the numpy kernels, but each slice is
walked by an odometer over the off-diagonal entries (row-major
positions, last position fastest) with the adjacency matrix and arc sum
updated incrementally, and acyclicity decided per candidate by repeated
source removal.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _is_acyclic(n, adj, indeg, removed):
    for j in range(n):
        c = 0
        for i in range(n):
            if adj[i, j] > 0:
                c += 1
        indeg[j] = c
        removed[j] = False
    for _ in range(n):
        v = -1
        for u in range(n):
            if not removed[u] and indeg[u] == 0:
                v = u
                break
        if v < 0:
            return False
        removed[v] = True
        for w in range(n):
            if adj[v, w] > 0 and not removed[w]:
                indeg[w] -= 1
    return True


@njit(cache=True)
def _init_walk(n, k, start, rows, cols, digits, adj):
    rem = start
    m = n * (n - 1)
    for q in range(m - 1, -1, -1):
        digits[q] = rem % (k + 1)
        rem //= k + 1
    arc_sum = 0
    for q in range(m):
        adj[rows[q], cols[q]] = digits[q]
        arc_sum += digits[q]
    return arc_sum


@njit(cache=True)
def _advance(k, rows, cols, digits, adj, arc_sum, m):
    q = m - 1
    while True:
        if digits[q] < k:
            digits[q] += 1
            adj[rows[q], cols[q]] = digits[q]
            return arc_sum + 1
        arc_sum -= digits[q]
        digits[q] = 0
        adj[rows[q], cols[q]] = 0
        q -= 1


@njit(cache=True)
def _offdiag(n, rows, cols):
    p = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                rows[p] = i
                cols[p] = j
                p += 1


@njit(cache=True)
def tally_by_arcs(n, k, start, stop, tally):
    m = n * (n - 1)
    rows = np.empty(m, np.int64)
    cols = np.empty(m, np.int64)
    _offdiag(n, rows, cols)
    digits = np.zeros(m, np.int64)
    adj = np.zeros((n, n), np.int64)
    indeg = np.zeros(n, np.int64)
    removed = np.zeros(n, np.bool_)
    arc_sum = _init_walk(n, k, start, rows, cols, digits, adj)
    idx = start
    while idx < stop:
        if _is_acyclic(n, adj, indeg, removed):
            tally[arc_sum] += 1
        idx += 1
        if idx < stop:
            arc_sum = _advance(k, rows, cols, digits, adj, arc_sum, m)


@njit(cache=True)
def tally_by_outdegree_sum(n, start, stop, tally):
    m = n * (n - 1)
    rows = np.empty(m, np.int64)
    cols = np.empty(m, np.int64)
    _offdiag(n, rows, cols)
    digits = np.zeros(m, np.int64)
    adj = np.zeros((n, n), np.int64)
    indeg = np.zeros(n, np.int64)
    removed = np.zeros(n, np.bool_)
    _init_walk(n, 1, start, rows, cols, digits, adj)
    idx = start
    while idx < stop:
        if _is_acyclic(n, adj, indeg, removed):
            s = 0
            for i in range(n):
                d = 0
                for j in range(n):
                    d += adj[i, j]
                s += d
            tally[s] += 1
        idx += 1
        if idx < stop:
            _advance(1, rows, cols, digits, adj, 0, m)


@njit(cache=True)
def count_bicolored_pairs(n, start, stop):
    m = n * (n - 1)
    rows = np.empty(m, np.int64)
    cols = np.empty(m, np.int64)
    _offdiag(n, rows, cols)
    digits = np.zeros(m, np.int64)
    adj = np.zeros((n, n), np.int64)
    indeg = np.zeros(n, np.int64)
    removed = np.zeros(n, np.bool_)
    _init_walk(n, 1, start, rows, cols, digits, adj)
    total = 0
    idx = start
    while idx < stop:
        if _is_acyclic(n, adj, indeg, removed):
            for j in range(n):
                c = 0
                for i in range(n):
                    if adj[i, j] > 0:
                        c += 1
                indeg[j] = c
            for colour in range(1 << n):
                ok = True
                for v in range(n):
                    if (colour >> v) & 1 and indeg[v] != 0:
                        ok = False
                        break
                if ok:
                    total += 1
        idx += 1
        if idx < stop:
            _advance(1, rows, cols, digits, adj, 0, m)
    return total
