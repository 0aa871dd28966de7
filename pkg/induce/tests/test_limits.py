"""Tests for classical limits of presentations and induced representations."""
from django.test import SimpleTestCase, tag

from freealg.services.elements import TensorElement
from hopf.services.axioms import verify_axioms
from induce.exceptions import LimitError
from induce.services.characters import make_character
from induce.services.induction import induce
from induce.services.limits import classical_limit, classical_limit_rep, scalar_limit
from presentation.services.elaborate import parse_expression
from presentation.tests.helpers import kgalilei, nullplane
from scalars.services.laurent import LaurentScalar


def primitive(algebra, name):
    g = algebra.generator(name)
    return TensorElement.from_pair(g, algebra.one()) + TensorElement.from_pair(algebra.one(), g)


class ScalarLimitTests(SimpleTestCase):
    def test_constant_term(self):
        value = LaurentScalar({0: 3, 1: 5}, 2)
        self.assertEqual(scalar_limit(value), LaurentScalar.constant(3, 2))

    def test_pole(self):
        with self.assertRaisesMessage(LimitError, 'pole'):
            scalar_limit(LaurentScalar.monomial(1, -1, 2), 'Entry')


class NullPlaneLimitTests(SimpleTestCase):
    def setUp(self):
        self.triplet = nullplane(degree=2, zorder=2)
        self.limit = classical_limit(self.triplet)

    def test_relations_become_poincare(self):
        algebra = self.limit.algebra
        self.assertEqual(algebra.commutator('K', 'Pp'), parse_expression('2*Pp', algebra))
        self.assertEqual(algebra.commutator('K', 'Pm'), parse_expression('-2*Pm', algebra))
        self.assertTrue(algebra.commutator('Pp', 'Pm').is_zero())

    def test_coproducts_become_primitive(self):
        algebra = self.limit.algebra
        for name in algebra.generators:
            self.assertEqual(algebra.coproduct_of(name), primitive(algebra, name), name)

    def test_dual_becomes_commutative(self):
        dual = self.limit.dual
        self.assertTrue(dual.commutator('ap', 'am').is_zero())
        self.assertTrue(dual.commutator('ap', 'phi').is_zero())

    def test_limit_commutes_with_induction(self):
        character = make_character(self.triplet.algebra, {'Pm': 2, 'Pp': 1})
        limit_rep = classical_limit_rep(induce(self.triplet, character), self.limit)
        classical = induce(self.limit, make_character(self.limit.algebra, {'Pm': 2, 'Pp': 1}))
        self.assertIsNone(limit_rep.first_difference(classical))
        self.assertTrue(limit_rep.same_as(classical))

    def test_keeps_truncation(self):
        self.assertEqual(self.limit.context.degree, 2)
        self.assertEqual(self.limit.context.zorder, 2)
        self.assertEqual(self.limit.with_truncation(1, 1).context.degree, 1)


class GalileiLimitTests(SimpleTestCase):
    def test_relations(self):
        limit = classical_limit(kgalilei(degree=2, zorder=2))
        algebra, dual = limit.algebra, limit.dual
        self.assertEqual(algebra.commutator('H', 'K'), parse_expression('-P', algebra))
        self.assertTrue(algebra.commutator('P', 'K').is_zero())
        self.assertTrue(dual.commutator('t', 'x').is_zero())
        self.assertEqual(algebra.coproduct_of('K'), primitive(algebra, 'K'))

    def test_induced_boost_survives_the_limit(self):
        triplet = kgalilei(degree=2, zorder=2)
        limit = classical_limit(triplet)
        rep = induce(triplet, make_character(triplet.algebra, {'P': 1, 'H': 2}))
        limit_rep = classical_limit_rep(rep, limit)
        self.assertEqual(limit_rep.matrix('K').entries, rep.matrix('K').entries)
        self.assertEqual(limit_rep.matrix('H').entry((0, 0, 0), (0, 0, 0)), 2)
        self.assertEqual(limit_rep.matrix('H').entry((2, 0, 0), (0, 0, 0)), 0)


@tag('slow')
class ClassicalLimitAxiomTests(SimpleTestCase):
    def test_limits_are_hopf_triplets(self):
        for name, load in (('nullplane', nullplane), ('kgalilei', kgalilei)):
            with self.subTest(name):
                report = verify_axioms(classical_limit(load(degree=4, zorder=4)))
                self.assertTrue(report.passed, report.to_json())
                self.assertEqual(len(report.entries), 20)
