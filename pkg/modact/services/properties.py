"""
Seeded property checks of the module actions and their matrices.
"""
from __future__ import annotations

import logging
import random
from typing import List, Optional

from hopf.services.axioms import AxiomCheck, AxiomEntry
from hopf.services.properties import property_cases, random_element
from hopf.services.structure import coproduct, counit
from modact.services.actions import ActionKind, act, target_algebra
from modact.services.matrices import adjoint_matrix, operator_matrix
from presentation.services.structures import HopfTriplet

logger = logging.getLogger(__name__)

SAMPLE_DEGREE = 2


def _label(*elements) -> str:
    return ' ; '.join(element.render() for element in elements)


def check_module_axioms(triplet: HopfTriplet, kind: ActionKind, rng: random.Random, cases: int) -> AxiomEntry:
    """
    h1 . (h2 . f) = (h1 h2) . f for left kinds, (f . h1) . h2 = f . (h1 h2) for right kinds,
    and the unit acts trivially.
    """
    algebra = triplet.algebra
    target = target_algebra(kind, algebra)
    bound = target.context.degree
    cap = target.internal_cap(bound)
    check = AxiomCheck(f'property:module:{kind.value}', bound)
    for _ in range(cases):
        h1 = random_element(algebra, rng, SAMPLE_DEGREE)
        h2 = random_element(algebra, rng, SAMPLE_DEGREE)
        f = random_element(target, rng, bound)
        product = (h1 * h2).truncate(2 * SAMPLE_DEGREE)
        if kind.is_left:
            inner = act(kind, h2, f, cap)
            lhs = act(kind, h1, inner, bound)
        else:
            inner = act(kind, h1, f, cap)
            lhs = act(kind, h2, inner, bound)
        if not check.expect(lhs == act(kind, product, f, bound), _label(h1, h2, f)):
            break
        if not check.expect(act(kind, algebra.one(), f, bound) == f.truncate(bound), _label(f)):
            break
    return check.entry()


def check_compatibility(triplet: HopfTriplet, kind: ActionKind, rng: random.Random, cases: int) -> AxiomEntry:
    """
    Coregular actions respect products: h > (f g) = (h_(1) > f)(h_(2) > g),
    (f g) < h = (f < h_(1))(g < h_(2)), and the unit goes to counit(h) * 1.
    """
    algebra = triplet.algebra
    target = target_algebra(kind, algebra)
    bound = target.context.degree
    cap = target.internal_cap(bound)
    check = AxiomCheck(f'property:compatibility:{kind.value}', bound)
    for _ in range(cases):
        h = random_element(algebra, rng, SAMPLE_DEGREE)
        f = random_element(target, rng, bound // 2)
        g = random_element(target, rng, bound // 2)
        lhs = act(kind, h, f * g, bound)
        rhs = target.zero()
        for leg1, leg2, coefficient in coproduct(h, SAMPLE_DEGREE, SAMPLE_DEGREE).legs():
            first = act(kind, leg1, f, cap)
            second = act(kind, leg2, g, cap)
            rhs = rhs + (first * second).scale(coefficient)
        if not check.expect(lhs == rhs.truncate(bound), _label(h, f, g)):
            break
        unit_image = act(kind, h, target.one(), bound)
        if not check.expect(unit_image == target.constant(counit(h)), _label(h)):
            break
    return check.entry()


def check_adjoint_involution(triplet: HopfTriplet, kind: ActionKind, rng: random.Random, cases: int) -> AxiomEntry:
    bound = triplet.context.degree
    check = AxiomCheck(f'property:adjoint-involution:{kind.value}', bound)
    for _ in range(max(1, cases // 10)):
        h = random_element(triplet.algebra, rng, SAMPLE_DEGREE)
        matrix = operator_matrix(kind, h, bound)
        if not check.expect(adjoint_matrix(adjoint_matrix(matrix)) == matrix, _label(h)):
            break
    return check.entry()


def run_module_properties(triplet: HopfTriplet, seed: int, cases: Optional[int] = None) -> List[AxiomEntry]:
    """Module, compatibility and adjoint suites for every action kind, reproducible from ``seed``."""
    rng = random.Random(seed)
    cases = property_cases(cases)
    entries: List[AxiomEntry] = []
    for kind in ActionKind:
        entries.append(check_module_axioms(triplet, kind, rng, cases))
        if kind.is_coregular:
            entries.append(check_compatibility(triplet, kind, rng, cases))
        entries.append(check_adjoint_involution(triplet, kind, rng, cases))
    logger.info(f'Module properties with seed {seed}: {len(entries)} suites, {cases} cases each')
    return entries
