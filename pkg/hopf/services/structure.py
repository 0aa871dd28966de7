"""
Coproduct, counit, antipode and pairing on whole truncated algebras.

Generator data comes from the elaborated presentation; monomials are
handled by the (anti-)multiplicative extension and memoised on the
presentation. Internal products run ``guard`` degrees above the requested
bound and are truncated afterwards.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional

from freealg.services.algebra import accumulate
from freealg.services.elements import AlgebraElement, TensorElement
from freealg.services.monomials import (
    Monomial,
    empty,
    first_letter,
    multi_factorial,
    shift,
)
from hopf.exceptions import PairingError
from presentation.services.structures import HopfPresentation
from scalars.services.laurent import LaurentScalar

logger = logging.getLogger(__name__)


# Coproduct

def _coproduct_monomial(algebra: HopfPresentation, monomial: Monomial, left: int, right: int) -> dict:
    key = (monomial, left, right)
    cached = algebra.coproduct_cache.get(key)
    if cached is not None:
        return cached
    first = first_letter(monomial)
    if first is None:
        unit = empty(algebra.size)
        result = {(unit, unit): algebra.scalar(1)}
    else:
        rest = _coproduct_monomial(algebra, shift(monomial, first, -1), left, right)
        result = algebra.multiply_tensor_terms(algebra.coproducts[first].terms, rest, left, right)
    algebra.coproduct_cache[key] = result
    return result


def coproduct(
    element: AlgebraElement,
    left: Optional[int] = None,
    right: Optional[int] = None,
    total: Optional[int] = None,
) -> TensorElement:
    """
    Multiplicative extension of the generator coproducts.

    Args:
        element: Element of a Hopf presentation.
        left: Degree bound of the first leg (default: run degree D).
        right: Degree bound of the second leg (default: ``left``).
        total: Optional bound on the summed degree of both legs.
    """
    algebra = element.algebra
    left = algebra.context.degree if left is None else left
    right = left if right is None else right
    inner_left, inner_right = algebra.internal_cap(left), algebra.internal_cap(right)
    terms: dict = {}
    for monomial, coefficient in element.terms.items():
        accumulate(terms, _coproduct_monomial(algebra, monomial, inner_left, inner_right), coefficient, None)
    return TensorElement(algebra, terms).truncate(left, right, total)


# Counit

def counit_monomial(algebra: HopfPresentation, monomial: Monomial) -> Fraction:
    value = Fraction(1)
    for index, exponent in enumerate(monomial):
        if exponent:
            value *= algebra.counits[index] ** exponent
    return value


def counit(element: AlgebraElement) -> LaurentScalar:
    """Homomorphic extension; with vanishing generator counits it is the constant term."""
    algebra = element.algebra
    total = algebra.scalar(0)
    for monomial, coefficient in element.terms.items():
        value = counit_monomial(algebra, monomial)
        if value:
            total = total + coefficient * value
    return total


# Antipode

def _antipode_monomial(algebra: HopfPresentation, monomial: Monomial, cap: int) -> dict:
    key = (monomial, cap)
    cached = algebra.antipode_cache.get(key)
    if cached is not None:
        return cached
    first = first_letter(monomial)
    if first is None:
        result = {monomial: algebra.scalar(1)}
    else:
        # S(g m) = S(m) S(g)
        rest = _antipode_monomial(algebra, shift(monomial, first, -1), cap)
        result = algebra.multiply_terms(rest, algebra.antipodes[first].terms, cap)
    algebra.antipode_cache[key] = result
    return result


def antipode(element: AlgebraElement, max_degree: Optional[int] = None) -> AlgebraElement:
    """Anti-multiplicative extension of the generator antipodes, truncated at D."""
    algebra = element.algebra
    bound = algebra.context.degree if max_degree is None else max_degree
    cap = algebra.internal_cap(bound)
    terms: dict = {}
    for monomial, coefficient in element.terms.items():
        accumulate(terms, _antipode_monomial(algebra, monomial, cap), coefficient, None)
    return AlgebraElement(algebra, terms).truncate(bound)


# Pairing

def _check_paired(h: AlgebraElement, f: AlgebraElement) -> None:
    if getattr(h.algebra, 'dual', None) is not f.algebra:
        raise PairingError(
            f'{h.algebra.name} and {f.algebra.name} are not paired with each other'
        )


def pair(h: AlgebraElement, f: AlgebraElement) -> LaurentScalar:
    """
    Dual-basis pairing ``<h_l, f_m> = l! delta_lm`` extended bilinearly.

    The pairing is symmetric in which side carries the first algebra of the
    pairing declaration.

    Raises:
        PairingError: the elements do not come from paired algebras.
    """
    _check_paired(h, f)
    small, large = (h.terms, f.terms) if len(h.terms) <= len(f.terms) else (f.terms, h.terms)
    total = h.algebra.scalar(0)
    for monomial, coefficient in small.items():
        other = large.get(monomial)
        if other is not None:
            total = total + coefficient * other * multi_factorial(monomial)
    return total


def pair_monomials(left: Monomial, right: Monomial) -> int:
    return multi_factorial(left) if left == right else 0


def pair_tensor(h: TensorElement, f: TensorElement) -> LaurentScalar:
    """``<h1 (x) h2, f1 (x) f2> = <h1, f1> <h2, f2>`` extended bilinearly."""
    if getattr(h.algebra, 'dual', None) is not f.algebra:
        raise PairingError(f'{h.algebra.name} and {f.algebra.name} are not paired with each other')
    total = h.algebra.scalar(0)
    for (m1, m2), coefficient in h.terms.items():
        other = f.terms.get((m1, m2))
        if other is not None:
            total = total + coefficient * other * (multi_factorial(m1) * multi_factorial(m2))
    return total


def structure_cache_sizes(algebra: HopfPresentation) -> dict:
    return {
        'coproduct': len(algebra.coproduct_cache),
        'antipode': len(algebra.antipode_cache),
        'products': algebra.cache_sizes(),
    }

