"""Tests for elaboration of presentations and parse_expression."""
from fractions import Fraction

from django.test import SimpleTestCase

from freealg.exceptions import MixedAlgebraError
from presentation.exceptions import PresentationError, WellFoundednessError
from presentation.services.elaborate import elaborate, parse_expression
from presentation.services.parser import parse_presentation
from presentation.tests.helpers import kgalilei, nullplane, preset_source
from scalars.services.laurent import LaurentScalar


class ElaborateNullPlaneTests(SimpleTestCase):
    def setUp(self):
        self.algebra, self.dual, self.pairing = nullplane(degree=3, zorder=2)
        self.z = self.algebra.parameter_scalar()

    def test_series_commutator(self):
        expected = self.algebra.element({
            (0, 0, 1): self.algebra.scalar(2),
            (0, 0, 2): self.z * -2,
            (0, 0, 3): (self.z * self.z) * Fraction(4, 3),
        })
        self.assertEqual(self.algebra.commutator('K', 'Pp').truncate(3), expected)
        self.assertEqual(self.algebra.commutator('Pp', 'K').truncate(3), -expected)

    def test_dual_commutators(self):
        self.assertEqual(self.dual.commutator('ap', 'am'), self.dual.generator('am').scale(self.z * -2))
        phi_terms = self.dual.commutator('ap', 'phi').truncate(2)
        self.assertEqual(phi_terms.coefficient((1, 0, 0)), self.z * -2)
        self.assertEqual(phi_terms.coefficient((2, 0, 0)), self.z * 2)

    def test_structure_maps(self):
        self.assertEqual(self.algebra.counit_of('K'), 0)
        self.assertEqual(self.algebra.antipode_of('Pp'), -self.algebra.generator('Pp'))
        delta = self.dual.coproduct_of('phi')
        self.assertEqual(delta.render(), '1 (x) phi^1 + phi^1 (x) 1')

    def test_pairing_links_both_sides(self):
        self.assertIs(self.algebra.dual, self.dual)
        self.assertIs(self.dual.dual, self.algebra)
        self.assertEqual(self.pairing.partner('Pm'), 'am')

    def test_deterministic(self):
        again = elaborate(parse_presentation(preset_source('nullplane')), 3, 2)
        for j, i in self.algebra.commutator_pairs():
            self.assertEqual(
                again.algebra.commutator(j, i).terms, self.algebra.commutator(j, i).terms
            )
        self.assertEqual(again.dual.antipode_of('ap').terms, self.dual.antipode_of('ap').terms)


class ElaborateGalileiTests(SimpleTestCase):
    def test_x_v_commutator(self):
        _, dual, _ = kgalilei(degree=3, zorder=2)
        expected = dual.monomial((2, 0, 0), LaurentScalar.monomial(Fraction(1, 2), 1, 2))
        self.assertEqual(dual.commutator('x', 'v'), expected)

    def test_rejects_inconsistent_relation(self):
        source = preset_source('kgalilei').replace('[t, x] = -w*x;', '[t, x] = t;')
        with self.assertRaises(WellFoundednessError):
            elaborate(parse_presentation(source), 3, 1)


class ElaborateErrorTests(SimpleTestCase):
    def setUp(self):
        self.source = preset_source('nullplane')

    def elaborate_with(self, old, new):
        return elaborate(parse_presentation(self.source.replace(old, new, 1)), 3, 2)

    def test_lowering_relation_rejected(self):
        with self.assertRaises(WellFoundednessError):
            self.elaborate_with('[K, Pm] = -2*Pm;', '[K, Pm] = K;')

    def test_letters_outside_interval_rejected(self):
        with self.assertRaises(WellFoundednessError) as caught:
            self.elaborate_with('[K, Pm] = -2*Pm;', '[K, Pm] = Pp^2;')
        self.assertEqual(caught.exception.line, 8)

    def test_non_nilpotent_series(self):
        with self.assertRaises(PresentationError):
            self.elaborate_with('K -> -exp(2*z*Pp)*K;', 'K -> -exp(1 + Pp)*K;')

    def test_division_by_element(self):
        with self.assertRaises(PresentationError) as caught:
            self.elaborate_with('[K, Pm] = -2*Pm;', '[K, Pm] = -2*Pm/Pp;')
        self.assertIn('scalar', str(caught.exception))

    def test_counit_must_be_rational(self):
        with self.assertRaises(PresentationError):
            self.elaborate_with('K -> 0;', 'K -> z;')

    def test_coproduct_must_be_tensor(self):
        with self.assertRaises(PresentationError):
            self.elaborate_with('Pp -> Pp (x) 1 + 1 (x) Pp;', 'Pp -> Pp;')


class ParseExpressionTests(SimpleTestCase):
    def setUp(self):
        self.triplet = nullplane(degree=3, zorder=2)
        self.algebra, self.dual, _ = self.triplet

    def test_reorders_product(self):
        result = parse_expression('Pm*K', self.algebra)
        self.assertEqual(result, self.algebra.monomial((1, 1, 0)) + self.algebra.generator('Pm').scale(2))

    def test_picks_home_algebra(self):
        result = parse_expression('exp(2*phi)', self.triplet, 2, 2)
        self.assertEqual(result.algebra.name, 'F')
        self.assertEqual(result.render(), '1 + 2*phi^1 + 2*phi^2')

    def test_mixed_algebras(self):
        with self.assertRaises(MixedAlgebraError):
            parse_expression('K + phi', self.triplet)

    def test_unknown_name(self):
        with self.assertRaises(PresentationError):
            parse_expression('Q*K', self.algebra)
