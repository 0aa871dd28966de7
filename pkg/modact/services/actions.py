"""
Regular and coregular module actions of a paired Hopf algebra.

Coregular actions come straight from the coproduct and the pairing:

    f ≺ h = <h, f_(1)> f_(2)      (right coregular)
    h ≻ f = <h, f_(2)> f_(1)      (left coregular)

Regular actions are multiplication inside one algebra.
"""
from __future__ import annotations

import logging
from enum import Enum
from typing import Optional, Tuple

from freealg.services.algebra import accumulate
from freealg.services.elements import AlgebraElement
from freealg.services.monomials import multi_factorial
from hopf.services.structure import coproduct
from modact.exceptions import ActionError

logger = logging.getLogger(__name__)


class ActionKind(str, Enum):
    LEFT_REGULAR = 'left-regular'
    RIGHT_REGULAR = 'right-regular'
    RIGHT_COREGULAR = 'right-coregular'
    LEFT_COREGULAR = 'left-coregular'

    @property
    def is_coregular(self) -> bool:
        return self in (ActionKind.RIGHT_COREGULAR, ActionKind.LEFT_COREGULAR)

    @property
    def is_left(self) -> bool:
        """Left modules compose as h1 ▷ (h2 ▷ f) = (h1 h2) ▷ f."""
        return self in (ActionKind.LEFT_REGULAR, ActionKind.LEFT_COREGULAR)

    @classmethod
    def parse(cls, value) -> 'ActionKind':
        try:
            return cls(value)
        except ValueError:
            choices = ', '.join(kind.value for kind in cls)
            raise ActionError(f'Unknown action kind {value!r}; expected one of {choices}') from None


def target_algebra(kind: ActionKind, acting):
    """The algebra acted upon when ``acting`` acts through ``kind``."""
    if kind.is_coregular:
        if acting.dual is None:
            raise ActionError(f'{acting.name} has no paired algebra for a coregular action')
        return acting.dual
    return acting


def _check(kind: ActionKind, h: AlgebraElement, f: AlgebraElement) -> None:
    expected = target_algebra(kind, h.algebra)
    if f.algebra is not expected:
        raise ActionError(
            f'{kind.value} action of {h.algebra.name} needs an element of {expected.name}, '
            f'got one of {f.algebra.name}'
        )


def _pairing_weights(h: AlgebraElement) -> dict:
    """<h, m> for every monomial m with a non-zero pairing."""
    return {m: c * multi_factorial(m) for m, c in h.terms.items()}


def act_raw(
    kind: ActionKind,
    h: AlgebraElement,
    f: AlgebraElement,
    degree: Optional[int] = None,
) -> Tuple[AlgebraElement, bool]:
    """
    Apply the action and report whether the image reaches above ``degree``.

    Returns:
        (image truncated at ``degree``, True when components of degree
        ``degree + 1`` were dropped).
    """
    kind = ActionKind(kind)
    _check(kind, h, f)
    target = f.algebra
    bound = target.context.degree if degree is None else degree

    if kind is ActionKind.LEFT_REGULAR:
        image = h * f
    elif kind is ActionKind.RIGHT_REGULAR:
        image = f * h
    else:
        weights = _pairing_weights(h)
        if not weights:
            return target.zero(), False
        reach = max(sum(m) for m in weights)
        if kind is ActionKind.RIGHT_COREGULAR:
            delta = coproduct(f, reach, bound + 1)
        else:
            delta = coproduct(f, bound + 1, reach)
        terms: dict = {}
        for (m1, m2), coefficient in delta.terms.items():
            paired, kept = (m1, m2) if kind is ActionKind.RIGHT_COREGULAR else (m2, m1)
            weight = weights.get(paired)
            if weight is not None:
                accumulate(terms, {kept: coefficient}, weight, None)
        image = AlgebraElement(target, terms)
    overflow = image.degree > bound
    return image.truncate(bound), overflow


def act(kind, h: AlgebraElement, f: AlgebraElement, degree: Optional[int] = None) -> AlgebraElement:
    """
    Canonical image of ``f`` under the action of ``h``.

    Raises:
        ActionError: ``f`` does not live in the algebra the kind acts on.
    """
    image, _ = act_raw(kind, h, f, degree)
    return image
