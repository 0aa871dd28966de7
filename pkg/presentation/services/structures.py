"""
Elaborated Hopf presentations and the (H, H', pairing) triplet.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Tuple

from freealg.services.algebra import PbwAlgebra
from freealg.services.context import TruncationContext
from freealg.services.elements import AlgebraElement, TensorElement


class HopfPresentation(PbwAlgebra):
    """
    A PBW algebra together with coproduct, counit and antipode on generators.

    ``relation_pairs`` keeps the (left, right) orientation of each relation
    as written in the source so that rendering reproduces it.
    """

    def __init__(
        self,
        name: str,
        generators: Sequence[str],
        parameter: str,
        context: TruncationContext,
        *,
        step_budget: Optional[int] = None,
    ):
        super().__init__(name, generators, parameter, context, step_budget=step_budget)
        self.coproducts: Dict[int, TensorElement] = {}
        self.counits: Dict[int, Fraction] = {}
        self.antipodes: Dict[int, AlgebraElement] = {}
        self.relation_pairs: Tuple[Tuple[str, str], ...] = ()
        self.dual: Optional['HopfPresentation'] = None
        self.pairing: Optional['PairingDecl'] = None
        self.coproduct_cache: dict = {}
        self.antipode_cache: dict = {}

    def internal_cap(self, cap: int) -> int:
        """Degree at which to compute so that results are exact up to ``cap``."""
        return min(cap + self.context.guard_size, self.working_degree)

    def coproduct_of(self, generator) -> TensorElement:
        return self.coproducts[self.index(generator)]

    def counit_of(self, generator) -> Fraction:
        return self.counits[self.index(generator)]

    def antipode_of(self, generator) -> AlgebraElement:
        return self.antipodes[self.index(generator)]

    def __repr__(self) -> str:
        return f'HopfPresentation({self.name}: {" < ".join(self.generators)}; {self.context})'


@dataclass(frozen=True)
class PairingDecl:
    """Positional bijection between the generators of ``left`` and ``right``."""

    left: str
    right: str
    pairs: Tuple[Tuple[str, str], ...]

    def partner(self, generator: str) -> str:
        for a, b in self.pairs:
            if a == generator:
                return b
            if b == generator:
                return a
        raise KeyError(generator)


@dataclass
class HopfTriplet:
    """
    The elaborated pair (H, H') with their pairing.

    ``builder`` re-elaborates the same source at another truncation; results
    are cached per (D, Z).
    """

    algebra: HopfPresentation
    dual: HopfPresentation
    pairing: PairingDecl
    builder: Optional[Callable[[int, int], 'HopfTriplet']] = field(default=None, repr=False)
    _variants: dict = field(default_factory=dict, repr=False)

    def __iter__(self):
        return iter((self.algebra, self.dual, self.pairing))

    @property
    def context(self) -> TruncationContext:
        return self.algebra.context

    def by_name(self, name: str) -> HopfPresentation:
        for algebra in (self.algebra, self.dual):
            if algebra.name == name:
                return algebra
        raise KeyError(name)

    def with_truncation(self, degree: int, zorder: int) -> 'HopfTriplet':
        if (degree, zorder) == (self.context.degree, self.context.zorder):
            return self
        if self.builder is None:
            raise ValueError('This triplet cannot be rebuilt at another truncation')
        key = (degree, zorder)
        if key not in self._variants:
            self._variants[key] = self.builder(degree, zorder)
        return self._variants[key]


def link(algebra: HopfPresentation, dual: HopfPresentation, pairing: PairingDecl) -> None:
    """Point both presentations at each other and at the pairing."""
    algebra.dual, dual.dual = dual, algebra
    algebra.pairing = dual.pairing = pairing
