"""Tests for carrier solving, induced matrices, gauge shifts and rescaling."""
import json
from fractions import Fraction
from math import factorial

from django.test import SimpleTestCase, tag

from freealg.services.algebra import PbwAlgebra
from freealg.services.context import TruncationContext
from freealg.services.monomials import degree as monomial_degree, enumerate_basis
from freealg.services.series import exp, log1p
from induce.exceptions import InductionError
from induce.services.characters import make_character
from induce.services.induction import (
    InductionSide,
    gauge_shift,
    induce,
    induced_action,
    rescale_check,
    solve_equivariance,
)
from modact.services.actions import ActionKind, act
from presentation.services.elaborate import parse_expression
from presentation.tests.helpers import kgalilei, nullplane
from scalars.services.laurent import LaurentScalar


def phi_power(q):
    return (q, 0, 0)


def plus_translation_multiplier(alpha, degree, zorder):
    """Series of (1/2z) log(1 - exp(-2 phi) (1 - exp(2 z alpha))) in a free algebra on phi."""
    z1 = zorder + 1
    free = PbwAlgebra.free(['phi'], 'z', TruncationContext.create(degree, z1))
    e_minus = exp(free.generator('phi').scale(-2))
    shift = free.one() - exp(free.constant(LaurentScalar.monomial(2 * alpha, 1, z1)))
    series = log1p(-(e_minus * shift)).scale(LaurentScalar.monomial(Fraction(1, 2), -1, z1))
    return [series.coefficient((k,)).retruncate(zorder) for k in range(degree + 1)]


def fraction_rank(rows):
    rows = [list(row) for row in rows]
    rank = 0
    for column in range(len(rows[0]) if rows else 0):
        pivot = next((k for k in range(rank, len(rows)) if rows[k][column]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for k in range(rank + 1, len(rows)):
            factor = rows[k][column] / rows[rank][column]
            rows[k] = [a - factor * b for a, b in zip(rows[k], rows[rank])]
        rank += 1
    return rank


def brute_force_dimension(triplet, character, kind, solve_degree, drop):
    """Solutions of s . f = chi(s) f from act() on every basis monomial, by rational rank."""
    algebra, dual, _ = triplet
    basis = enumerate_basis(dual.size, solve_degree)
    equations = {}
    for j, monomial in enumerate(basis):
        f = dual.monomial(monomial)
        for name in character.generators:
            image = act(kind, algebra.generator(name), f, solve_degree) - f.scale(character.value(name))
            for row, coefficient in image.terms.items():
                if monomial_degree(row) <= solve_degree - drop:
                    assert coefficient.is_constant()
                    equations.setdefault((name, row), [Fraction(0)] * len(basis))[j] = coefficient.coefficient(0)
    return len(basis) - fraction_rank(equations.values())


class InductionSideTests(SimpleTestCase):
    def test_kinds(self):
        self.assertIs(InductionSide.LEFT.equivariance_kind, ActionKind.LEFT_COREGULAR)
        self.assertIs(InductionSide.LEFT.induced_kind, ActionKind.RIGHT_COREGULAR)
        self.assertIs(InductionSide.parse('right').induced_kind, ActionKind.LEFT_COREGULAR)
        with self.assertRaises(InductionError):
            InductionSide.parse('up')


class NullPlaneCarrierTests(SimpleTestCase):
    def test_translation_character_on_degree_one(self):
        triplet = nullplane(degree=1, zorder=2)
        algebra, dual, _ = triplet
        carrier = solve_equivariance(triplet, make_character(algebra, {'Pm': 2, 'Pp': 3}))
        self.assertEqual(carrier.monomials, (phi_power(0), phi_power(1)))
        self.assertEqual(carrier.element(phi_power(0)), parse_expression('1 + 2*am + 3*ap', dual))
        self.assertEqual(carrier.element(phi_power(1)), dual.generator('phi'))

    def test_dimension_grows_with_degree(self):
        for degree in (1, 2, 3):
            with self.subTest(degree=degree):
                triplet = nullplane(degree=degree, zorder=1)
                carrier = solve_equivariance(triplet, make_character(triplet.algebra, {'Pm': 1, 'Pp': 1}))
                self.assertEqual(len(carrier), degree + 1)

    def test_dimension_matches_rank_oracle(self):
        nullplane_triplet = nullplane(degree=1, zorder=1)
        galilei = kgalilei(degree=1, zorder=1)
        cases = [
            (nullplane_triplet, {'Pm': 2, 'Pp': Fraction(1, 3)}, 'left'),
            (nullplane_triplet, {'K': 3}, 'right'),
            (galilei, {'P': 1, 'H': 2}, 'left'),
        ]
        for triplet, values, side in cases:
            with self.subTest(values=values, side=side):
                character = make_character(triplet.algebra, values)
                carrier = solve_equivariance(triplet, character, side)
                expected = brute_force_dimension(
                    triplet, character, carrier.side.equivariance_kind, carrier.solve_degree, carrier.drop
                )
                self.assertEqual(len(carrier.vectors), expected)

    def test_carrier_is_equivariant(self):
        triplet = nullplane(degree=2, zorder=2)
        algebra, dual, _ = triplet
        character = make_character(algebra, {'Pm': Fraction(1, 2), 'Pp': 2})
        carrier = solve_equivariance(triplet, character)
        for monomial in carrier.monomials:
            f = carrier.full_element(monomial)
            for name in character.generators:
                image = act(ActionKind.LEFT_COREGULAR, algebra.generator(name), f, 2)
                self.assertEqual(image, f.truncate(2).scale(character.value(name)), (monomial, name))

    def test_boost_character_on_the_right(self):
        triplet = nullplane(degree=1, zorder=2)
        algebra, dual, _ = triplet
        carrier = solve_equivariance(triplet, make_character(algebra, {'K': 2}), side='right')
        self.assertEqual(set(carrier.monomials), {(0, 0, 0), (0, 1, 0), (0, 0, 1)})
        self.assertEqual(carrier.element((0, 0, 0)), parse_expression('1 + 2*phi', dual))

    def test_character_from_another_algebra(self):
        galilei = kgalilei(degree=1, zorder=1)
        with self.assertRaises(InductionError):
            solve_equivariance(nullplane(degree=1, zorder=1), make_character(galilei.algebra, {'P': 1}))


class NullPlaneInducedTests(SimpleTestCase):
    degree, zorder = 3, 2

    def setUp(self):
        self.triplet = nullplane(self.degree, self.zorder)
        self.algebra, self.dual, _ = self.triplet
        self.character = make_character(self.algebra, {'Pm': 3, 'Pp': 1})
        self.rep = induce(self.triplet, self.character, 'left')

    def test_boost_is_derivative(self):
        boost = self.rep.matrix('K')
        for q in range(1, self.degree + 1):
            self.assertEqual(boost.entry(phi_power(q - 1), phi_power(q)), q)
        self.assertEqual(boost.entry(phi_power(1), phi_power(1)), 0)

    def test_minus_translation_multiplies_by_exponential(self):
        matrix = self.rep.matrix('Pm')
        for i in range(self.degree + 1):
            for j in range(self.degree + 1):
                expected = Fraction(3 * 2 ** (i - j), factorial(i - j)) if i >= j else 0
                self.assertEqual(matrix.entry(phi_power(i), phi_power(j)), expected, (i, j))

    def test_plus_translation_log_multiplier(self):
        multiplier = plus_translation_multiplier(1, self.degree, self.zorder)
        matrix = self.rep.matrix('Pp')
        for i in range(self.degree + 1):
            for j in range(self.degree + 1):
                expected = multiplier[i - j] if i >= j else 0
                self.assertEqual(matrix.entry(phi_power(i), phi_power(j)), expected, (i, j))

    def test_representation_property(self):
        # Right module: M([g, h]) = M(h) M(g) - M(g) M(h).
        for g, h in (('K', 'Pm'), ('K', 'Pp'), ('Pm', 'Pp')):
            with self.subTest(pair=(g, h)):
                mg, mh = self.rep.matrix(g), self.rep.matrix(h)
                bracket = (mh @ mg - mg @ mh).restrict(2)
                expected = induced_action(self.rep.carrier, self.algebra.commutator(g, h)).restrict(2)
                self.assertIsNone(bracket.first_difference(expected, skip=()))

    def test_wrong_acting_algebra(self):
        with self.assertRaises(InductionError):
            induced_action(self.rep.carrier, self.dual.generator('phi'))

    def test_to_json(self):
        data = json.loads(self.rep.to_json())
        self.assertEqual(data['side'], 'left')
        self.assertEqual(data['character'], {'Pm': '3', 'Pp': '1'})
        self.assertEqual(len(data['carrier']), self.degree + 1)
        self.assertEqual(set(data['generators']), {'K', 'Pm', 'Pp'})


class GalileiInducedTests(SimpleTestCase):
    degree, zorder = 2, 2

    def setUp(self):
        self.triplet = kgalilei(self.degree, self.zorder)
        self.algebra, self.dual, _ = self.triplet
        self.w = self.dual.parameter_scalar()
        self.rep = induce(self.triplet, make_character(self.algebra, {'P': 2, 'H': 3}))

    def v(self, q):
        return (q, 0, 0)

    def test_carrier_is_powers_of_boost_coordinate(self):
        self.assertEqual(self.rep.carrier.monomials, (self.v(0), self.v(1), self.v(2)))

    def test_boost_is_derivative(self):
        boost = self.rep.matrix('K')
        self.assertEqual(boost.entry(self.v(0), self.v(1)), 1)
        self.assertEqual(boost.entry(self.v(1), self.v(2)), 2)
        self.assertEqual(boost.entry(self.v(2), self.v(2)), 0)

    def test_energy_multiplier(self):
        # b - a v - (a^2 w / 4) v^2 with a = 2, b = 3
        coefficients = [3, -2, self.w * -1]
        energy = self.rep.matrix('H')
        for i in range(3):
            for j in range(3):
                expected = coefficients[i - j] if i >= j else 0
                self.assertEqual(energy.entry(self.v(i), self.v(j)), expected, (i, j))

    def test_translation_multiplier(self):
        # a + (w/2) a^2 v + (w^2/4) a^3 v^2
        coefficients = [2, self.w * 2, self.w * self.w * 2]
        translation = self.rep.matrix('P')
        for i in range(3):
            self.assertEqual(translation.entry(self.v(i), self.v(0)), coefficients[i], i)

    def test_energy_gauge_matches_zero_energy_character(self):
        shifted = gauge_shift(self.rep, 'H', 3)
        reference = induce(self.triplet, make_character(self.algebra, {'P': 2, 'H': 0}))
        self.assertTrue(shifted.same_as(reference))
        self.assertFalse(self.rep.same_as(reference))


class GaugeShiftTests(SimpleTestCase):
    def setUp(self):
        self.triplet = nullplane(degree=2, zorder=2)
        self.algebra = self.triplet.algebra

    def test_boost_shift_on_the_right(self):
        rep = induce(self.triplet, make_character(self.algebra, {'K': 2}), 'right')
        reference = induce(self.triplet, make_character(self.algebra, {'K': 0}), 'right')
        self.assertIsNone(gauge_shift(rep, 'K', 2).first_difference(reference))
        self.assertTrue(gauge_shift(rep, 'K', 2).same_as(reference))

    def test_zero_shift_and_inverse(self):
        rep = induce(self.triplet, make_character(self.algebra, {'Pm': 1, 'Pp': 1}))
        self.assertTrue(gauge_shift(rep, 'Pm', 0).same_as(rep))
        self.assertTrue(gauge_shift(gauge_shift(rep, 'Pm', 3), 'Pm', -3).same_as(rep))
        boosted = gauge_shift(rep, 'K', Fraction(1, 2))
        self.assertEqual(boosted.gauge, {'K': self.algebra.scalar(Fraction(1, 2))})
        self.assertTrue(gauge_shift(boosted, 'K', Fraction(-1, 2)).same_as(rep))


class RescaleTests(SimpleTestCase):
    def setUp(self):
        self.triplet = nullplane(degree=2, zorder=2)
        self.algebra = self.triplet.algebra

    def character(self, minus, plus):
        return make_character(self.algebra, {'Pm': minus, 'Pp': plus})

    def test_minus_translation_value_rescales(self):
        report = rescale_check(self.triplet, self.character(2, 1), self.character(1, 1), 2)
        self.assertTrue(report)
        self.assertEqual(report.difference, '')

    def test_mismatched_plus_translation(self):
        report = rescale_check(self.triplet, self.character(2, 1), self.character(1, 2), 2)
        self.assertFalse(report)
        self.assertTrue(report.difference.startswith('Pp:'))

    def test_unit_factor_and_zero(self):
        self.assertTrue(rescale_check(self.triplet, self.character(1, 1), self.character(1, 1), 1))
        with self.assertRaisesMessage(InductionError, 'non-zero'):
            rescale_check(self.triplet, self.character(1, 1), self.character(1, 1), 0)


@tag('slow')
class AcceptanceSizeTests(SimpleTestCase):
    def test_dimension_matches_rank_oracle_up_to_degree_four(self):
        cases = [
            (nullplane, {'Pm': 1, 'Pp': Fraction(1, 2)}, 'left'),
            (nullplane, {'K': 3}, 'right'),
            (kgalilei, {'P': 1, 'H': 2}, 'left'),
        ]
        for degree in (1, 2, 3, 4):
            for load, values, side in cases:
                with self.subTest(degree=degree, values=values, side=side):
                    triplet = load(degree=degree, zorder=1)
                    character = make_character(triplet.algebra, values)
                    carrier = solve_equivariance(triplet, character, side)
                    expected = brute_force_dimension(
                        triplet, character, carrier.side.equivariance_kind, carrier.solve_degree, carrier.drop
                    )
                    self.assertEqual(len(carrier.vectors), expected)

    def test_galilei_representation_property(self):
        triplet = kgalilei(degree=4, zorder=2)
        rep = induce(triplet, make_character(triplet.algebra, {'P': 1, 'H': 2}))
        # Right module: M([g, h]) = M(h) M(g) - M(g) M(h).
        for g, h in (('K', 'P'), ('K', 'H'), ('P', 'H')):
            with self.subTest(pair=(g, h)):
                mg, mh = rep.matrix(g), rep.matrix(h)
                bracket = (mh @ mg - mg @ mh).restrict(3)
                expected = induced_action(rep.carrier, triplet.algebra.commutator(g, h)).restrict(3)
                self.assertIsNone(bracket.first_difference(expected, skip=()))

    def test_rescaling_by_negative_third(self):
        triplet = nullplane(degree=3, zorder=2)
        first = make_character(triplet.algebra, {'Pm': Fraction(-1, 3), 'Pp': Fraction(1, 2)})
        second = make_character(triplet.algebra, {'Pm': 1, 'Pp': Fraction(1, 2)})
        report = rescale_check(triplet, first, second, Fraction(-1, 3))
        self.assertTrue(report, report.difference)
        doubled = make_character(triplet.algebra, {'Pm': 2, 'Pp': Fraction(1, 2)})
        self.assertTrue(rescale_check(triplet, doubled, second, 2))
