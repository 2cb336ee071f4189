"""Exact rational series algebra: reciprocal identities, flip product,
and error contracts."""

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acyclic_census.counts import count_acyclic, count_bicolored, eval_at_k
from acyclic_census.series import (GraphicSeries, from_sequence, multiply,
                                   psi_series, reciprocal, unit, verify_identity)


def counts_series(k, order):
    return from_sequence({n: eval_at_k(n, k) for n in range(order + 1)}, k, 1, order)


class TestPsiSeries:
    def test_leading_coefficients(self):
        f = psi_series(1, 4)
        assert f.coeffs == (Fraction(1), Fraction(-1), Fraction(1, 4),
                            Fraction(-1, 48), Fraction(1, 1536))

    def test_weighting_scheme(self):
        for k in (1, 2, 5):
            f = psi_series(k, 8)
            for n in range(9):
                assert f[n] == Fraction((-1) ** n, factorial(n) * (1 + k) ** comb(n, 2))

    def test_integer_weights(self):
        assert psi_series(3, 6).integer_weights() == [(-1) ** n for n in range(7)]


class TestIdentities:
    def test_reciprocal_generates_simple_counts(self):
        order = 12
        check = verify_identity(reciprocal(psi_series(1, order)),
                                from_sequence({n: count_acyclic(n) for n in range(order + 1)},
                                              1, 1, order))
        assert check.equal

    @pytest.mark.parametrize("k", (1, 3, 7, 15))
    def test_reciprocal_generates_multidigraph_counts(self, k):
        order = 12
        assert verify_identity(reciprocal(psi_series(k, order)), counts_series(k, order)).equal

    @pytest.mark.parametrize("k", (1, 3, 7, 15))
    def test_product_with_counts_is_unit(self, k):
        order = 12
        product = multiply(psi_series(k, order), counts_series(k, order))
        assert verify_identity(product, unit(order, k)).equal

    def test_bicolored_flip_product(self):
        order = 12
        psi = psi_series(1, order)
        b = from_sequence({n: count_bicolored(n) for n in range(order + 1)}, 1, 1, order)
        assert verify_identity(multiply(b, psi), psi.negate_argument()).equal

    def test_reciprocal_weights_are_the_counts(self):
        rec = reciprocal(psi_series(3, 8))
        assert rec.integer_weights() == [eval_at_k(n, 3) for n in range(9)]


class TestAlgebra:
    @given(st.lists(st.fractions(), min_size=1, max_size=8),
           st.lists(st.fractions(), min_size=1, max_size=8))
    @settings(max_examples=60, deadline=None)
    def test_multiply_commutes(self, xs, ys):
        size = min(len(xs), len(ys))
        f = GraphicSeries(tuple(xs[:size]))
        g = GraphicSeries(tuple(ys[:size]))
        assert multiply(f, g).coeffs == multiply(g, f).coeffs

    @given(st.lists(st.fractions(), min_size=1, max_size=8))
    @settings(max_examples=60, deadline=None)
    def test_reciprocal_roundtrip(self, xs):
        if xs[0] == 0:
            xs[0] = Fraction(1)
        f = GraphicSeries(tuple(xs))
        assert verify_identity(multiply(f, reciprocal(f)), unit(f.order)).equal

    def test_negate_argument_is_involution(self):
        f = psi_series(2, 9)
        assert f.negate_argument().negate_argument().coeffs == f.coeffs

    def test_negated_psi_has_positive_coefficients(self):
        g = psi_series(1, 9).negate_argument()
        assert all(c > 0 for c in g.coeffs)


class TestErrors:
    def test_order_mismatch(self):
        with pytest.raises(ValueError, match="order mismatch"):
            multiply(psi_series(1, 3), psi_series(1, 4))
        with pytest.raises(ValueError, match="order mismatch"):
            verify_identity(psi_series(1, 3), psi_series(1, 4))

    def test_zero_constant_term(self):
        f = GraphicSeries((Fraction(0), Fraction(1)))
        with pytest.raises(ZeroDivisionError):
            reciprocal(f)

    def test_missing_value(self):
        with pytest.raises(KeyError):
            from_sequence({0: 1, 2: 3}, 1, 1, 2)

    def test_bad_sign(self):
        with pytest.raises(ValueError, match="sign"):
            from_sequence({0: 1}, 1, 2, 0)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            psi_series(0, 4)

    def test_weights_need_k(self):
        with pytest.raises(ValueError, match="no k"):
            GraphicSeries((Fraction(1),)).integer_weights()

    def test_non_integral_weights(self):
        f = GraphicSeries((Fraction(1), Fraction(1, 3)), k=1)
        with pytest.raises(ArithmeticError):
            f.integer_weights()


def test_mismatch_reporting():
    lhs = GraphicSeries((Fraction(1), Fraction(2), Fraction(3)))
    rhs = GraphicSeries((Fraction(1), Fraction(2), Fraction(4)))
    check = verify_identity(lhs, rhs)
    assert not check
    assert check.mismatch_index == 2
    assert (check.lhs_value, check.rhs_value) == (Fraction(3), Fraction(4))
