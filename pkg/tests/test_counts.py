"""Exact counting: recurrences against an independent in-test brute force,
frozen reference values, and structural invariants."""

from concurrent.futures import ThreadPoolExecutor
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acyclic_census import counts
from acyclic_census.counts import (ArcPolynomial, SequenceTable, arc_enumerator,
                                   count_acyclic, count_bicolored, eval_at_k,
                                   multi_arc_enumerator, sequence_table,
                                   smallcover_cube_classes,
                                   smallcover_simplexpower_classes)

A_SEQ = [1, 1, 3, 25, 543, 29281, 3781503, 1138779265, 783702329343]
B_SEQ = [1, 2, 8, 74, 1664, 90722, 11756288]
A3_POLY = (1, 6, 12, 6)
A4_POLY = (1, 12, 60, 152, 186, 108, 24)
CUBE_SEQ = [1, 6, 259, 87360, 236240088, 5143046823936]

H_ROWS = {
    2: [1, 7, 289, 63487, 69711361, 367404658687],
    3: [1, 15, 2689, 5140479, 98267258881, 18033699790913535],
    4: [1, 31, 23041, 365330431, 115851037900801, 705367139018659069951],
}


def reference_tally(n, k):
    """Independent brute force: tally acyclic digraphs by arc count."""
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    tally = [0] * (k * comb(n, 2) + 1)
    for assignment in product(range(k + 1), repeat=len(cells)):
        arcs = {cell for cell, mult in zip(cells, assignment) if mult}
        if reference_is_acyclic(n, arcs):
            tally[sum(assignment)] += 1
    return tally


def reference_is_acyclic(n, arcs):
    """True iff some vertex order makes every arc go forward."""
    remaining = set(range(n))
    while remaining:
        with_incoming = {j for (i, j) in arcs if i in remaining and j in remaining}
        sources = remaining - with_incoming
        if not sources:
            return False
        remaining -= sources
    return True


class TestAgainstReference:
    @pytest.mark.parametrize("n", range(5))
    def test_count_acyclic(self, n):
        assert count_acyclic(n) == sum(reference_tally(n, 1))

    @pytest.mark.parametrize("n", range(4))
    @pytest.mark.parametrize("k", (1, 2, 3))
    def test_multi_arc_enumerator(self, n, k):
        assert list(multi_arc_enumerator(n, k).coeffs) == reference_tally(n, k)

    @pytest.mark.parametrize("n", range(4))
    def test_count_bicolored(self, n):
        cells = [(i, j) for i in range(n) for j in range(n) if i != j]
        pairs = 0
        for assignment in product((0, 1), repeat=len(cells)):
            arcs = {cell for cell, mult in zip(cells, assignment) if mult}
            if not reference_is_acyclic(n, arcs):
                continue
            targets = {j for (_, j) in arcs}
            for colouring in product(("red", "blue"), repeat=n):
                if all(c == "blue" or v not in targets
                       for v, c in enumerate(colouring)):
                    pairs += 1
        assert count_bicolored(n) == pairs


class TestFrozenValues:
    def test_a_sequence(self):
        assert [count_acyclic(n) for n in range(len(A_SEQ))] == A_SEQ

    def test_b_sequence(self):
        assert [count_bicolored(n) for n in range(len(B_SEQ))] == B_SEQ

    def test_arc_polynomials(self):
        assert arc_enumerator(0).coeffs == (1,)
        assert arc_enumerator(2).coeffs == (1, 2)
        assert arc_enumerator(3).coeffs == A3_POLY
        assert arc_enumerator(4).coeffs == A4_POLY

    def test_multi_arc_small(self):
        assert multi_arc_enumerator(2, 2).coeffs == (1, 2, 2)

    @pytest.mark.parametrize("r", sorted(H_ROWS))
    def test_h_rows(self, r):
        got = [smallcover_simplexpower_classes(n, r) for n in range(1, 7)]
        assert got == H_ROWS[r]

    def test_cube_classes(self):
        got = [smallcover_cube_classes(n) for n in range(1, len(CUBE_SEQ) + 1)]
        assert got == CUBE_SEQ


class TestStructure:
    @pytest.mark.parametrize("n", range(9))
    def test_polynomial_shape(self, n):
        poly = arc_enumerator(n)
        assert poly.degree == comb(n, 2)
        assert poly.coeffs[0] == 1
        assert poly.coeffs[-1] == factorial(n)
        assert all(c > 0 for c in poly.coeffs)
        if n >= 2:
            assert poly.coeffs[1] == n * (n - 1)

    @pytest.mark.parametrize("k", (2, 3))
    def test_multi_polynomial_shape(self, k):
        for n in range(6):
            poly = multi_arc_enumerator(n, k)
            assert poly.degree == k * comb(n, 2)
            assert poly.coeffs[0] == 1
            assert all(c > 0 for c in poly.coeffs)

    def test_evaluate_at_zero_and_one(self):
        for n in range(8):
            assert arc_enumerator(n).evaluate(0) == 1
            assert arc_enumerator(n).evaluate(1) == count_acyclic(n)

    def test_two_path_agreement(self):
        for n in range(13):
            for k in (1, 3, 7, 15, 31):
                assert arc_enumerator(n).evaluate(k) == eval_at_k(n, k)

    @given(n=st.integers(0, 6), k=st.integers(1, 4))
    @settings(max_examples=40, deadline=None)
    def test_enumerator_evaluates_to_count(self, n, k):
        assert multi_arc_enumerator(n, k).evaluate(1) == eval_at_k(n, k)

    def test_monotone_in_n(self):
        for fn in (count_acyclic, count_bicolored):
            values = [fn(n) for n in range(1, 9)]
            assert all(a < b for a, b in zip(values, values[1:]))
        for r in (1, 2, 3):
            values = [smallcover_simplexpower_classes(n, r) for n in range(1, 7)]
            assert all(a < b for a, b in zip(values, values[1:]))

    def test_monotone_in_r(self):
        for n in range(2, 7):
            values = [smallcover_simplexpower_classes(n, r) for r in range(1, 6)]
            assert all(a < b for a, b in zip(values, values[1:]))

    def test_h_r1_is_a(self):
        for n in range(1, 9):
            assert smallcover_simplexpower_classes(n, 1) == count_acyclic(n)

    def test_cube_integrality_through_12(self):
        for n in range(1, 13):
            assert smallcover_cube_classes(n) > 0


class TestPreconditions:
    def test_negative_order(self):
        with pytest.raises(ValueError):
            count_acyclic(-1)

    def test_non_integer_order(self):
        with pytest.raises(ValueError):
            count_acyclic(2.0)

    def test_order_cap(self, monkeypatch):
        monkeypatch.setattr(counts, "ORDER_CAP", 10)
        with pytest.raises(ValueError, match="ORDER_CAP"):
            count_acyclic(11)
        assert count_acyclic(10) > 0

    @pytest.mark.parametrize("k", (0, -3, 1.5))
    def test_bad_multiplicity(self, k):
        with pytest.raises(ValueError):
            eval_at_k(3, k)
        with pytest.raises(ValueError):
            multi_arc_enumerator(3, k)

    def test_smallcover_domains(self):
        with pytest.raises(ValueError):
            smallcover_cube_classes(0)
        with pytest.raises(ValueError):
            smallcover_simplexpower_classes(0, 2)
        with pytest.raises(ValueError):
            smallcover_simplexpower_classes(3, 0)


class TestSequenceTable:
    def test_roundtrip(self):
        table = sequence_table("h", 5, 2)
        again = SequenceTable.from_json_dict(table.to_json_dict())
        assert again.name == "h" and again.parameter == 2
        assert again.values == table.values
        assert again.key == "h:2"

    def test_start_indices(self):
        assert min(sequence_table("a", 3).values) == 0
        assert min(sequence_table("cube", 3).values) == 1

    def test_recompute_mismatches(self):
        table = sequence_table("a", 5)
        assert table.recompute_mismatches() == []
        table.values[4] = 999
        assert table.recompute_mismatches() == [4]

    def test_validation(self):
        with pytest.raises(ValueError):
            SequenceTable("nope")
        with pytest.raises(ValueError):
            SequenceTable("h")
        with pytest.raises(ValueError):
            SequenceTable("a", parameter=3)


def test_concurrent_readers_and_writers():
    counts._value_tables.clear()
    counts._poly_tables.clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda n: count_acyclic(n % 30), range(120)))
    assert results[:8] == [count_acyclic(n) for n in range(8)]
    assert ArcPolynomial(3, arc_enumerator(3).coeffs).evaluate(1) == 25
