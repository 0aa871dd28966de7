"""
Finitely presented PBW algebras and their normal-ordering engine.

Generators are totally ordered; a monomial ``(l_1, ..., l_n)`` stands for
``g_1^l_1 ... g_n^l_n``. For each pair ``j > i`` the algebra stores the
commutator ``C_ji = [g_j, g_i]`` so that ``g_j g_i = g_i g_j + C_ji``.

Products are computed by left multiplication with single generators,
memoised per (generator, monomial, degree cap). Words of generator degree
above the cap are dropped at every step.
"""
from __future__ import annotations

import logging
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from django.conf import settings

from freealg.exceptions import (
    AlgebraError,
    PendingCommutatorError,
    RewriteBudgetExceeded,
    UnknownGeneratorError,
)
from freealg.services.context import TruncationContext
from freealg.services.elements import AlgebraElement, TensorElement
from freealg.services.monomials import (
    Monomial,
    degree,
    empty,
    first_letter,
    last_letter,
    shift,
    unit,
)
from scalars.services.laurent import LaurentScalar

logger = logging.getLogger(__name__)

GeneratorRef = Union[str, int]
Terms = dict


def accumulate(target: dict, source: Mapping, coefficient: LaurentScalar, one: LaurentScalar) -> None:
    """``target += coefficient * source`` in place, dropping cancelled keys."""
    for key, value in source.items():
        if coefficient is not one:
            value = value * coefficient
            if not value:
                continue
        current = target.get(key)
        total = value if current is None else current + value
        if total:
            target[key] = total
        elif current is not None:
            del target[key]


class PbwAlgebra:
    """
    An ordered set of generators plus commutation relations.

    Args:
        name: Block name used in diagnostics and rendering.
        generators: Generator names in PBW order.
        parameter: Name of the deformation parameter.
        context: Degree/parameter truncation of this algebra.
        step_budget: Maximum commutator applications per product.
        cache_size: Entries kept in each product memo before it is cleared.
    """

    def __init__(
        self,
        name: str,
        generators: Sequence[str],
        parameter: str,
        context: TruncationContext,
        *,
        step_budget: Optional[int] = None,
        cache_size: Optional[int] = None,
    ):
        if len(set(generators)) != len(generators):
            raise AlgebraError(f'Duplicate generator names in {name}: {list(generators)}')
        self.name = name
        self.generators = tuple(generators)
        self.parameter = parameter
        self.context = context
        self.size = len(self.generators)
        self.step_budget = step_budget or getattr(settings, 'HOPFKIT_REWRITE_STEP_BUDGET', 10 ** 6)
        self.cache_size = cache_size or getattr(settings, 'HOPFKIT_PRODUCT_CACHE_SIZE', 500_000)
        self._index = {g: i for i, g in enumerate(self.generators)}
        self._commutators: dict[tuple[int, int], dict] = {}
        self._pending: set[tuple[int, int]] = set()
        self._generator_cache: dict = {}
        self._monomial_cache: dict = {}
        self._one = LaurentScalar.one(context.zorder)
        self._zero = LaurentScalar.zero(context.zorder)
        self._steps = 0
        self._active = False

    @classmethod
    def free(cls, generators: Sequence[str], parameter: str, context: TruncationContext, name: str = 'free'):
        """An algebra with commuting generators (no relations)."""
        return cls(name, generators, parameter, context)

    # Naming

    @property
    def working_degree(self) -> int:
        return self.context.working_degree

    def index(self, generator: GeneratorRef) -> int:
        if isinstance(generator, int):
            if 0 <= generator < self.size:
                return generator
            raise UnknownGeneratorError(f'Generator index {generator} out of range for {self.name}')
        try:
            return self._index[generator]
        except KeyError:
            raise UnknownGeneratorError(f'Unknown generator {generator!r} in {self.name}') from None

    def has_generator(self, name: str) -> bool:
        return name in self._index

    # Scalars and elements

    def scalar(self, value) -> LaurentScalar:
        if isinstance(value, LaurentScalar):
            if value.order != self.context.zorder:
                return value.retruncate(self.context.zorder)
            return value
        if not value:
            return self._zero
        return LaurentScalar.constant(Fraction(value), self.context.zorder)

    def parameter_scalar(self, exponent: int = 1) -> LaurentScalar:
        return LaurentScalar.monomial(1, exponent, self.context.zorder)

    def element(self, terms: Optional[Mapping[Monomial, LaurentScalar]] = None) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {empty(self.size): self._one})

    def constant(self, value) -> AlgebraElement:
        return AlgebraElement(self, {empty(self.size): self.scalar(value)})

    def generator(self, generator: GeneratorRef) -> AlgebraElement:
        return AlgebraElement(self, {unit(self.size, self.index(generator)): self._one})

    def monomial(self, monomial: Monomial, coefficient=1) -> AlgebraElement:
        return AlgebraElement(self, {tuple(monomial): self.scalar(coefficient)})

    def tensor(self, terms=None) -> TensorElement:
        return TensorElement(self, terms)

    # Commutators

    def set_commutator(self, a: GeneratorRef, b: GeneratorRef, value: AlgebraElement) -> None:
        """Record ``[g_a, g_b] = value`` (either orientation)."""
        j, i = self.index(a), self.index(b)
        if j == i:
            raise AlgebraError(f'A generator commutes with itself: [{a}, {b}]')
        terms = {m: self.scalar(c) for m, c in value.terms.items() if degree(m) <= self.working_degree}
        if j < i:
            j, i = i, j
            terms = {m: -c for m, c in terms.items()}
        self._commutators[(j, i)] = {m: c for m, c in terms.items() if c}
        self._pending.discard((j, i))
        self._generator_cache.clear()
        self._monomial_cache.clear()

    def mark_pending(self, pairs: Iterable[tuple[GeneratorRef, GeneratorRef]]) -> None:
        """Declare commutators that exist but are not known yet."""
        for a, b in pairs:
            j, i = self.index(a), self.index(b)
            self._pending.add((max(j, i), min(j, i)))

    def commutator_terms(self, j: int, i: int) -> dict:
        """Stored terms of ``[g_j, g_i]`` for ``j > i``."""
        return self._commutators.get((j, i), {})

    def commutator(self, a: GeneratorRef, b: GeneratorRef) -> AlgebraElement:
        """``[g_a, g_b]`` as an element, in either orientation."""
        j, i = self.index(a), self.index(b)
        if j == i:
            return self.zero()
        if j > i:
            return AlgebraElement(self, self.commutator_terms(j, i))
        return -AlgebraElement(self, self.commutator_terms(i, j))

    def commutator_pairs(self) -> list[tuple[int, int]]:
        return sorted(self._commutators)

    # Normal ordering

    @contextmanager
    def _budget(self):
        outermost = not self._active
        if outermost:
            self._active = True
            self._steps = 0
        try:
            yield
        except RecursionError:
            raise RewriteBudgetExceeded(
                f'Normal ordering in {self.name} recursed without terminating'
            ) from None
        finally:
            if outermost:
                self._active = False

    def _spend(self) -> None:
        self._steps += 1
        if self._steps > self.step_budget:
            raise RewriteBudgetExceeded(
                f'Normal ordering in {self.name} exceeded {self.step_budget} rewrite steps'
            )

    def _remember(self, cache: dict, key, result: dict) -> None:
        if len(cache) >= self.cache_size:
            logger.debug(f'Product memo of {self.name} reached {self.cache_size} entries; clearing')
            cache.clear()
        cache[key] = result

    def _mul_generator(self, i: int, monomial: Monomial, cap: int) -> dict:
        """Canonical form of ``g_i * monomial``."""
        if degree(monomial) + 1 > cap:
            return {}
        key = (i, monomial, cap)
        cached = self._generator_cache.get(key)
        if cached is not None:
            return cached
        j = first_letter(monomial)
        if j is None or i <= j:
            result = {shift(monomial, i): self._one}
        else:
            if (i, j) in self._pending:
                raise PendingCommutatorError(
                    f'Product needs [{self.generators[i]}, {self.generators[j]}] before it is defined'
                )
            self._spend()
            rest = shift(monomial, j, -1)
            # g_i g_j rest = g_j (g_i rest) + [g_i, g_j] rest
            result: dict = {}
            for m, c in self._mul_generator(i, rest, cap).items():
                accumulate(result, self._mul_generator(j, m, cap), c, self._one)
            for m, c in self._commutators.get((i, j), {}).items():
                accumulate(result, self._mul_monomials(m, rest, cap), c, self._one)
        self._remember(self._generator_cache, key, result)
        return result

    def _mul_monomials(self, left: Monomial, right: Monomial, cap: int) -> dict:
        """Canonical form of ``left * right`` for two PBW monomials."""
        if degree(left) + degree(right) > cap:
            return {}
        last = last_letter(left)
        if last is None:
            return {right: self._one}
        first = first_letter(right)
        if first is None or last <= first:
            return {tuple(a + b for a, b in zip(left, right)): self._one}
        key = (left, right, cap)
        cached = self._monomial_cache.get(key)
        if cached is not None:
            return cached
        head = shift(left, last, -1)
        result: dict = {}
        for m, c in self._mul_generator(last, right, cap).items():
            accumulate(result, self._mul_monomials(head, m, cap), c, self._one)
        self._remember(self._monomial_cache, key, result)
        return result

    def multiply_terms(self, left: Mapping, right: Mapping, cap: Optional[int] = None) -> dict:
        """Product of two term maps, in canonical form, words above ``cap`` dropped."""
        cap = self.working_degree if cap is None else cap
        result: dict = {}
        with self._budget():
            for m1, c1 in left.items():
                for m2, c2 in right.items():
                    accumulate(result, self._mul_monomials(m1, m2, cap), c1 * c2, None)
        return result

    def multiply_tensor_terms(
        self,
        left: Mapping,
        right: Mapping,
        left_cap: Optional[int] = None,
        right_cap: Optional[int] = None,
        total_cap: Optional[int] = None,
    ) -> dict:
        """Legwise product of two tensor term maps."""
        left_cap = self.working_degree if left_cap is None else left_cap
        right_cap = self.working_degree if right_cap is None else right_cap
        result: dict = {}
        with self._budget():
            for (a1, a2), c1 in left.items():
                for (b1, b2), c2 in right.items():
                    first = self._mul_monomials(a1, b1, left_cap)
                    if not first:
                        continue
                    second = self._mul_monomials(a2, b2, right_cap)
                    if not second:
                        continue
                    coefficient = c1 * c2
                    if not coefficient:
                        continue
                    for m1, d1 in first.items():
                        for m2, d2 in second.items():
                            if total_cap is not None and degree(m1) + degree(m2) > total_cap:
                                continue
                            value = coefficient * d1 * d2
                            if not value:
                                continue
                            current = result.get((m1, m2))
                            total = value if current is None else current + value
                            if total:
                                result[(m1, m2)] = total
                            elif current is not None:
                                del result[(m1, m2)]
        return result

    def normal_order_word(self, word: Sequence[GeneratorRef], cap: Optional[int] = None) -> dict:
        """Canonical form of a word of generators."""
        cap = self.working_degree if cap is None else cap
        letters = [self.index(g) for g in word]
        result = {empty(self.size): self._one}
        with self._budget():
            for letter in reversed(letters):
                nxt: dict = {}
                for m, c in result.items():
                    accumulate(nxt, self._mul_generator(letter, m, cap), c, self._one)
                result = nxt
        return result

    def cache_sizes(self) -> tuple[int, int]:
        return len(self._generator_cache), len(self._monomial_cache)

    def __repr__(self) -> str:
        return f'PbwAlgebra({self.name}: {" < ".join(self.generators)})'


def normal_order(word: Sequence[GeneratorRef], algebra: PbwAlgebra, max_degree: Optional[int] = None) -> AlgebraElement:
    """PBW normal form of a word, truncated at the run degree."""
    bound = algebra.context.degree if max_degree is None else max_degree
    return AlgebraElement(algebra, algebra.normal_order_word(word)).truncate(bound)
