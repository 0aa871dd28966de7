"""Tests for PBW normal ordering and element arithmetic."""
from fractions import Fraction
import random

from django.test import SimpleTestCase

from freealg.exceptions import (
    MixedAlgebraError,
    PendingCommutatorError,
    RewriteBudgetExceeded,
    UnknownGeneratorError,
)
from freealg.services.algebra import PbwAlgebra, normal_order
from freealg.services.context import TruncationContext
from freealg.services.elements import TensorElement, multiply, truncate
from freealg.services.monomials import enumerate_basis, letters
from freealg.tests.factories import nullplane_f, nullplane_u
from scalars.services.laurent import LaurentScalar


class NormalOrderTests(SimpleTestCase):
    def setUp(self):
        self.u = nullplane_u(degree=3, zorder=2)
        self.f = nullplane_f(degree=3, zorder=2)
        self.z = self.u.parameter_scalar()

    def test_pm_past_k(self):
        result = normal_order(('Pm', 'K'), self.u)
        expected = self.u.monomial((1, 1, 0)) + self.u.generator('Pm').scale(2)
        self.assertEqual(result, expected)

    def test_pp_past_k_expands_series(self):
        result = normal_order(('Pp', 'K'), self.u)
        z = self.z
        expected = self.u.element({
            (1, 0, 1): self.u.scalar(1),
            (0, 0, 1): self.u.scalar(-2),
            (0, 0, 2): z * 2,
            (0, 0, 3): (z * z) * Fraction(-4, 3),
        })
        self.assertEqual(result, expected)

    def test_ap_past_am(self):
        result = normal_order(('ap', 'am'), self.f)
        expected = self.f.monomial((0, 1, 1)) + self.f.generator('am').scale(self.z * -2)
        self.assertEqual(result, expected)

    def test_power_identity_for_pm(self):
        # Pm^n K = K Pm^n + 2n Pm^n
        for n in range(1, 3):
            result = normal_order(('Pm',) * n + ('K',), self.u)
            expected = self.u.monomial((1, n, 0)) + self.u.monomial((0, n, 0), 2 * n)
            self.assertEqual(result, expected)

    def test_canonical_words_are_fixed_points(self):
        for monomial in enumerate_basis(self.u.size, 3):
            word = [self.u.generators[i] for i in letters(monomial)]
            self.assertEqual(normal_order(word, self.u), self.u.monomial(monomial))

    def test_commutators_match_presentation(self):
        for algebra in (self.u, self.f):
            names = algebra.generators
            for j in range(algebra.size):
                for i in range(j):
                    difference = normal_order((names[j], names[i]), algebra) - normal_order(
                        (names[i], names[j]), algebra
                    )
                    self.assertEqual(difference, algebra.commutator(j, i).truncate(3))

    def test_unknown_generator(self):
        with self.assertRaises(UnknownGeneratorError):
            normal_order(('Q',), self.u)

    def test_step_budget(self):
        algebra = nullplane_u(degree=6, zorder=2)
        algebra.step_budget = 3
        with self.assertRaises(RewriteBudgetExceeded):
            normal_order(('Pp', 'Pp', 'Pm', 'Pm', 'K', 'K'), algebra)

    def test_bounded_memo_gives_same_products(self):
        word = ('Pp', 'Pp', 'Pm', 'K', 'Pm', 'K')
        reference = normal_order(word, nullplane_u(degree=6, zorder=2)).terms
        algebra = nullplane_u(degree=6, zorder=2)
        algebra.cache_size = 4
        self.assertEqual(normal_order(word, algebra).terms, reference)
        generator_entries, monomial_entries = algebra.cache_sizes()
        self.assertLessEqual(generator_entries, 4)
        self.assertLessEqual(monomial_entries, 4)

    def test_pending_commutator_is_reported(self):
        algebra = PbwAlgebra('A', ('a', 'b'), 'z', TruncationContext(2, 1))
        algebra.mark_pending([('b', 'a')])
        with self.assertRaises(PendingCommutatorError):
            normal_order(('b', 'a'), algebra)


class MultiplyTests(SimpleTestCase):
    def setUp(self):
        self.u = nullplane_u(degree=3, zorder=2)
        self.f = nullplane_f(degree=3, zorder=2)

    def test_ordered_product(self):
        product = multiply(self.u.generator('K'), self.u.generator('Pm'))
        self.assertEqual(product, self.u.monomial((1, 1, 0)))

    def test_unordered_product(self):
        product = multiply(self.u.generator('Pm'), self.u.generator('K'))
        self.assertEqual(product.render(), '2*Pm^1 + K^1*Pm^1')

    def test_tensor_square_of_primitive(self):
        phi = self.f.generator('phi')
        one = self.f.one()
        delta = TensorElement.from_pair(phi, one) + TensorElement.from_pair(one, phi)
        square = multiply(delta, delta)
        expected = (
            TensorElement.from_pair(phi * phi, one)
            + TensorElement.from_pair(phi, phi).scale(2)
            + TensorElement.from_pair(one, phi * phi)
        )
        self.assertEqual(square, expected)

    def test_mixed_algebras_raise(self):
        with self.assertRaises(MixedAlgebraError):
            self.u.generator('K') + self.f.generator('phi')
        with self.assertRaises(MixedAlgebraError):
            multiply(self.u.generator('K'), self.f.generator('phi'))

    def test_associative_and_unital_on_random_elements(self):
        rng = random.Random(7)
        basis = enumerate_basis(self.u.size, 2)
        z = self.u.parameter_scalar()

        def sample(algebra):
            terms = {}
            for _ in range(3):
                monomial = rng.choice(basis)
                coefficient = self.u.scalar(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
                if rng.random() < 0.3:
                    coefficient = coefficient * z
                terms[monomial] = coefficient.retruncate(algebra.context.zorder)
            return algebra.element(terms)

        for algebra in (self.u, self.f):
            for _ in range(20):
                a, b, c = sample(algebra), sample(algebra), sample(algebra)
                self.assertEqual(((a * b) * c).truncate(3), (a * (b * c)).truncate(3))
                self.assertEqual(multiply(algebra.one(), a), a.truncate(3))
                self.assertEqual(multiply(a, algebra.one()), a.truncate(3))


class TruncateAndRenderTests(SimpleTestCase):
    def setUp(self):
        self.u = nullplane_u(degree=3, zorder=2)
        self.f = nullplane_f(degree=5, zorder=2)

    def test_truncate(self):
        phi = self.f.generator('phi')
        element = self.f.one() + phi + phi ** 4
        self.assertEqual(truncate(element, 3), self.f.one() + phi)
        self.assertEqual(truncate(self.f.zero(), 3), self.f.zero())
        self.assertTrue(truncate(self.u.monomial((1, 2, 0)), 2).is_zero())

    def test_canonical_rendering(self):
        coefficient = LaurentScalar({0: 2, 1: -2}, 2)
        element = self.u.element({(0, 1, 0): coefficient, (1, 0, 1): self.u.scalar(1)})
        self.assertEqual(element.render(), '(2 - 2*z)*Pm^1 + K^1*Pp^1')
        self.assertEqual(self.u.one().render(), '1')
        self.assertEqual(self.u.zero().render(), '0')
        self.assertEqual((-self.u.generator('K')).render(), '-K^1')
