"""
Helpers for PBW monomials, stored as exponent tuples ``(l_1, ..., l_n)``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial
from typing import Sequence, Tuple

Monomial = Tuple[int, ...]


def degree(monomial: Monomial) -> int:
    return sum(monomial)


def unit(size: int, index: int) -> Monomial:
    return tuple(1 if i == index else 0 for i in range(size))


def empty(size: int) -> Monomial:
    return (0,) * size


def shift(monomial: Monomial, index: int, amount: int = 1) -> Monomial:
    exponents = list(monomial)
    exponents[index] += amount
    return tuple(exponents)


def first_letter(monomial: Monomial) -> int | None:
    for index, exponent in enumerate(monomial):
        if exponent:
            return index
    return None


def last_letter(monomial: Monomial) -> int | None:
    for index in range(len(monomial) - 1, -1, -1):
        if monomial[index]:
            return index
    return None


def letters(monomial: Monomial) -> list[int]:
    """The monomial as an ordered word of generator indices."""
    word = []
    for index, exponent in enumerate(monomial):
        word.extend([index] * exponent)
    return word


def multi_factorial(monomial: Monomial) -> int:
    result = 1
    for exponent in monomial:
        result *= factorial(exponent)
    return result


def basis_key(monomial: Monomial) -> tuple:
    """Basis order: by degree, then 1, K, Pm, Pp, K^2, K*Pm, ... within a degree."""
    return (degree(monomial), tuple(-e for e in monomial))


@lru_cache(maxsize=None)
def enumerate_basis(size: int, max_degree: int) -> tuple[Monomial, ...]:
    """All monomials in ``size`` generators of degree <= max_degree, in basis order."""
    monomials = []
    for total in range(max_degree + 1):
        for word in combinations_with_replacement(range(size), total):
            exponents = [0] * size
            for index in word:
                exponents[index] += 1
            monomials.append(tuple(exponents))
    return tuple(sorted(monomials, key=basis_key))


def render_monomial(monomial: Monomial, names: Sequence[str]) -> str:
    """Canonical form ``K^1*Pm^2``; the empty monomial renders as ``1``."""
    parts = [f'{names[i]}^{e}' for i, e in enumerate(monomial) if e]
    return '*'.join(parts) if parts else '1'
