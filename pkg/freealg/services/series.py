"""
exp / log1p / geometric series of truncation-nilpotent elements.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Literal

from freealg.exceptions import AlgebraError, NonNilpotentError
from freealg.services.elements import AlgebraElement

logger = logging.getLogger(__name__)

SeriesKind = Literal['exp', 'log1p', 'geom']


def _check_nilpotent(element: AlgebraElement) -> None:
    constant = element.constant_term()
    if constant and constant.valuation < 1:
        raise NonNilpotentError(
            f'Series argument has constant part {constant.render(element.algebra.parameter)}; '
            'it must vanish or carry a positive parameter power'
        )


def _power_limit(element: AlgebraElement) -> int:
    context = element.algebra.context
    return (context.working_degree + 1) * (2 * context.zorder + 2) + 1


def analytic_series(kind: SeriesKind, element: AlgebraElement) -> AlgebraElement:
    """
    Sum the series of ``kind`` at ``element`` until a power truncates to zero.

    Args:
        kind: ``exp`` (sum e^k/k!), ``log1p`` (sum (-1)^(k+1) e^k/k) or ``geom`` (sum e^k).
        element: A truncation-nilpotent element.

    Returns:
        The finite sum, at the algebra's working precision.

    Raises:
        NonNilpotentError: the constant part has non-positive valuation, or
            the powers do not vanish within the truncation.
    """
    if kind not in ('exp', 'log1p', 'geom'):
        raise AlgebraError(f'Unknown series kind {kind!r}')
    _check_nilpotent(element)
    algebra = element.algebra
    result = algebra.zero() if kind == 'log1p' else algebra.one()
    power = algebra.one()
    for k in range(1, _power_limit(element) + 1):
        power = power * element
        if power.is_zero():
            return result
        if kind == 'exp':
            power = power.scale(Fraction(1, k))
            result = result + power
        elif kind == 'log1p':
            sign = 1 if k % 2 else -1
            result = result + power.scale(Fraction(sign, k))
        else:
            result = result + power
    raise NonNilpotentError(
        f'{kind} series in {algebra.name} did not terminate under the truncation'
    )


def exp(element: AlgebraElement) -> AlgebraElement:
    return analytic_series('exp', element)


def log1p(element: AlgebraElement) -> AlgebraElement:
    return analytic_series('log1p', element)


def geom(element: AlgebraElement) -> AlgebraElement:
    return analytic_series('geom', element)
