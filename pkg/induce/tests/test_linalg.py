"""Tests for sparse row reduction over Laurent scalars."""
from django.test import SimpleTestCase

from induce.exceptions import InductionError
from induce.services.linalg import nullspace, rank, reduce_rows
from scalars.services.laurent import LaurentScalar


def s(value, exponent=0, order=2):
    return LaurentScalar.monomial(value, exponent, order)


class ReduceRowsTests(SimpleTestCase):
    def test_pivots_follow_column_order(self):
        rows = [{0: s(1), 1: s(2)}, {1: s(1), 2: s(3)}]
        pivots = reduce_rows(rows, order=(2, 1, 0))
        self.assertEqual(set(pivots), {2, 1})
        self.assertEqual(pivots[2][2], 1)
        self.assertNotIn(1, pivots[2])

    def test_dependent_rows(self):
        rows = [{0: s(1), 1: s(1)}, {0: s(2), 1: s(2)}]
        self.assertEqual(rank(rows, order=(0, 1)), 1)

    def test_parameter_pivot_raises(self):
        with self.assertRaisesMessage(InductionError, 'valuation 1'):
            reduce_rows([{0: s(1, 1)}], order=(0,))

    def test_unit_pivot_preferred_over_parameter_pivot(self):
        pivots = reduce_rows([{0: s(1, 1), 1: s(1)}, {0: s(3), 1: s(1)}], order=(0, 1))
        self.assertEqual(pivots[0][0], 1)
        self.assertEqual(set(pivots), {0, 1})


class NullspaceTests(SimpleTestCase):
    def test_free_columns_are_unit_vectors(self):
        # x0 - 2 x1 = 0 and x2 = z x1
        rows = [{0: s(1), 1: s(-2)}, {2: s(1), 1: -s(1, 1)}]
        basis = nullspace(rows, 3, order=(2, 0, 1), zorder=2)
        self.assertEqual(set(basis), {1})
        self.assertEqual(basis[1], {1: s(1), 0: s(2), 2: s(1, 1)})

    def test_no_equations(self):
        basis = nullspace([], 2, order=(0, 1), zorder=1)
        self.assertEqual(basis, {0: {0: LaurentScalar.one(1)}, 1: {1: LaurentScalar.one(1)}})
