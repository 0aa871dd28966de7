"""
Characters of subalgebras generated by a subset of the PBW generators.

A character fixes one scalar per generator of the subset and extends
multiplicatively to PBW monomials in those generators.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Dict, Tuple

from freealg.services.elements import AlgebraElement
from induce.exceptions import CharacterError
from presentation.exceptions import PresentationError
from presentation.services.elaborate import parse_expression
from scalars.services.laurent import LaurentScalar

logger = logging.getLogger(__name__)

_ASSIGNMENT = re.compile(r'^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+?)\s*$')


@dataclass(frozen=True)
class Character:
    """Values of a character on the generators of its subalgebra, in PBW order."""

    algebra: object
    values: Tuple[Tuple[str, LaurentScalar], ...]

    @property
    def generators(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.values)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(self.algebra.index(name) for name in self.generators)

    def value(self, name: str) -> LaurentScalar:
        for generator, value in self.values:
            if generator == name:
                return value
        raise CharacterError(f'Character is not defined on {name}')

    def is_parameter_free(self) -> bool:
        return all(value.is_constant() for _, value in self.values)

    def evaluate(self, element: AlgebraElement) -> LaurentScalar:
        """Extend multiplicatively; monomials outside the subalgebra raise CharacterError."""
        allowed = set(self.indices)
        total = self.algebra.scalar(0)
        for monomial, coefficient in element.terms.items():
            term = coefficient
            for index, exponent in enumerate(monomial):
                if not exponent:
                    continue
                if index not in allowed:
                    raise CharacterError(
                        f'{self.algebra.generators[index]} is outside the subalgebra of {self.describe()}'
                    )
                term = term * self.value(self.algebra.generators[index]) ** exponent
            total = total + term
        return total

    def shifted(self, name: str, amount: LaurentScalar) -> 'Character':
        return Character(
            self.algebra,
            tuple((g, v - amount if g == name else v) for g, v in self.values),
        )

    def labels(self) -> Dict[str, str]:
        parameter = self.algebra.parameter
        return {name: value.render(parameter) for name, value in self.values}

    def describe(self) -> str:
        return ', '.join(f'{name}={text}' for name, text in self.labels().items())

    def __str__(self) -> str:
        return f'chi({self.describe()})'


def make_character(algebra, values: Dict[str, object]) -> Character:
    """
    Build and validate a character from generator names to scalars.

    Raises:
        CharacterError: unknown generator, empty subset, a subset that does not
            close under commutation, or values that do not vanish on commutators.
    """
    if not values:
        raise CharacterError('A character needs at least one generator value')
    unknown = [name for name in values if not algebra.has_generator(name)]
    if unknown:
        raise CharacterError(f'Unknown generator(s) {", ".join(unknown)} in {algebra.name}')
    ordered = sorted(values, key=algebra.index)
    character = Character(algebra, tuple((name, algebra.scalar(values[name])) for name in ordered))
    validate_character(character)
    return character


def validate_character(character: Character) -> None:
    algebra = character.algebra
    indices = character.indices
    for position, j in enumerate(indices):
        for i in indices[:position]:
            relation = algebra.commutator(j, i)
            label = f'[{algebra.generators[j]}, {algebra.generators[i]}]'
            try:
                value = character.evaluate(relation)
            except CharacterError:
                raise CharacterError(
                    f'{", ".join(character.generators)} do not close under commutation: '
                    f'{label} = {relation.render()}'
                ) from None
            if value:
                raise CharacterError(
                    f'{character} does not vanish on {label}: value {value.render(algebra.parameter)}'
                )
    if not character.is_parameter_free():
        logger.warning(f'{character} takes parameter-dependent values; this is experimental')


def parse_character(text: str, algebra) -> Character:
    """
    Parse ``"Pm=2, Pp=1/2"``; each value is any scalar expression of the
    presentation language (``2*z`` included).
    """
    values: Dict[str, LaurentScalar] = {}
    for part in filter(None, (piece.strip() for piece in text.split(','))):
        match = _ASSIGNMENT.match(part)
        if not match:
            raise CharacterError(f'Malformed character value {part!r}; expected NAME=VALUE')
        name, source = match.groups()
        if name in values:
            raise CharacterError(f'Character value for {name} given twice')
        try:
            element = parse_expression(source, algebra)
        except PresentationError as exc:
            raise CharacterError(f'Cannot read the value of {name}: {exc}') from exc
        if not element.is_scalar():
            raise CharacterError(f'Value of {name} must be a scalar, got {element.render()}')
        values[name] = element.constant_term()
    return make_character(algebra, values)
