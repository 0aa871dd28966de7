"""
Seeded random property checks of the structure maps.

Samples have degree <= D/2 so that products stay inside the exact range.
"""
from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import List, Optional

from django.conf import settings

from freealg.services.elements import AlgebraElement, TensorElement
from freealg.services.monomials import enumerate_basis
from hopf.services.axioms import AxiomEntry, AxiomCheck
from hopf.services.structure import antipode, coproduct, counit
from presentation.services.structures import HopfPresentation, HopfTriplet
from scalars.services.laurent import LaurentScalar

logger = logging.getLogger(__name__)


def property_cases(cases: Optional[int] = None) -> int:
    return cases if cases is not None else int(getattr(settings, 'HOPFKIT_PROPERTY_CASES', 100))


def random_scalar(rng: random.Random, zorder: int) -> LaurentScalar:
    terms = {
        exponent: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        for exponent in range(0, zorder + 1)
        if rng.random() < 0.6
    }
    return LaurentScalar(terms, zorder)


def random_element(algebra, rng: random.Random, max_degree: int, size: int = 3) -> AlgebraElement:
    basis = enumerate_basis(algebra.size, max_degree)
    terms = {}
    for _ in range(size):
        terms[rng.choice(basis)] = random_scalar(rng, algebra.context.zorder)
    return algebra.element(terms)


def _label(*elements) -> str:
    return ' ; '.join(element.render() for element in elements)


def check_structure_properties(algebra: HopfPresentation, rng: random.Random, cases: int) -> List[AxiomEntry]:
    bound = algebra.context.degree
    half = bound // 2
    cap = algebra.internal_cap(bound)
    delta_check = AxiomCheck(f'property:{algebra.name}:coproduct-morphism', bound)
    counit_check = AxiomCheck(f'property:{algebra.name}:counit-morphism', bound)
    antipode_check = AxiomCheck(f'property:{algebra.name}:antipode-antimorphism', bound)
    for _ in range(cases):
        e1 = random_element(algebra, rng, half)
        e2 = random_element(algebra, rng, half)
        product = e1 * e2
        if not delta_check.failed:
            d1, d2 = coproduct(e1, cap), coproduct(e2, cap)
            rhs = TensorElement(algebra, algebra.multiply_tensor_terms(d1.terms, d2.terms, cap, cap))
            delta_check.expect(coproduct(product, bound) == rhs.truncate(bound), _label(e1, e2))
        if not counit_check.failed:
            counit_check.expect(counit(product) == counit(e1) * counit(e2), _label(e1, e2))
        if not antipode_check.failed:
            s1, s2 = antipode(e1, cap), antipode(e2, cap)
            rhs = AlgebraElement(algebra, algebra.multiply_terms(s2.terms, s1.terms, cap))
            antipode_check.expect(antipode(product, bound) == rhs.truncate(bound), _label(e1, e2))
    return [delta_check.entry(), counit_check.entry(), antipode_check.entry()]


def check_scalar_ring(zorder: int, rng: random.Random, cases: int) -> AxiomEntry:
    check = AxiomCheck('property:scalars:ring', zorder)
    for _ in range(cases):
        a, b, c = (random_scalar(rng, zorder) for _ in range(3))
        label = f'{a} ; {b} ; {c}'
        if not check.expect(
            (a + b) + c == a + (b + c)
            and a * b == b * a
            and (a * b) * c == a * (b * c)
            and a * (b + c) == a * b + a * c
            and a - a == 0,
            label,
        ):
            break
    return check.entry()


def run_structure_properties(triplet: HopfTriplet, seed: int, cases: Optional[int] = None) -> List[AxiomEntry]:
    """Property suites of both algebras plus scalar ring axioms, reproducible from ``seed``."""
    rng = random.Random(seed)
    cases = property_cases(cases)
    entries: List[AxiomEntry] = []
    for algebra in (triplet.algebra, triplet.dual):
        entries.extend(check_structure_properties(algebra, rng, cases))
    entries.append(check_scalar_ring(triplet.context.zorder, rng, cases))
    logger.info(f'Structure properties with seed {seed}: {cases} cases per suite')
    return entries
