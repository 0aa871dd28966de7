"""
Induced representations from characters of subalgebras.

The carrier is the space of functions f in H' with s . f = chi(s) f for every
generator s of the subalgebra, the action being the coregular action of
``side``. The other coregular action commutes with it and acts on the
carrier; its matrices in the carrier basis are the induced representation.

The carrier is solved at the working degree and reported on its free
monomials of degree <= D.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from freealg.services.elements import AlgebraElement
from freealg.services.monomials import Monomial, degree as monomial_degree, enumerate_basis
from induce.exceptions import InductionError
from induce.services.characters import Character, validate_character
from induce.services.linalg import nullspace
from modact.services.actions import ActionKind, act
from modact.services.matrices import OperatorMatrix, operator_matrix
from presentation.services.structures import HopfTriplet
from scalars.services.laurent import LaurentScalar

logger = logging.getLogger(__name__)


class InductionSide(str, Enum):
    LEFT = 'left'
    RIGHT = 'right'

    @property
    def equivariance_kind(self) -> ActionKind:
        return ActionKind.LEFT_COREGULAR if self is InductionSide.LEFT else ActionKind.RIGHT_COREGULAR

    @property
    def induced_kind(self) -> ActionKind:
        return ActionKind.RIGHT_COREGULAR if self is InductionSide.LEFT else ActionKind.LEFT_COREGULAR

    @classmethod
    def parse(cls, value) -> 'InductionSide':
        try:
            return cls(value)
        except ValueError:
            raise InductionError(f'Unknown induction side {value!r}; expected left or right') from None


@dataclass(frozen=True)
class CarrierBasis:
    """
    Solutions of the equivariance condition, one per free monomial.

    ``vectors`` hold every solved coordinate up to ``solve_degree``;
    ``monomials`` are the free monomials of degree <= ``degree``.
    """

    algebra: object
    character: Character
    side: InductionSide
    degree: int
    solve_degree: int
    drop: int
    vectors: Dict[Monomial, Dict[Monomial, LaurentScalar]] = field(repr=False)

    @property
    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(m for m in self.vectors if monomial_degree(m) <= self.degree)

    def __len__(self) -> int:
        return len(self.monomials)

    def full_element(self, monomial: Monomial) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.vectors[monomial])

    def element(self, monomial: Monomial) -> AlgebraElement:
        return self.full_element(monomial).truncate(self.degree)

    def elements(self) -> Tuple[AlgebraElement, ...]:
        return tuple(self.element(m) for m in self.monomials)

    def coordinates(self, element: AlgebraElement) -> Dict[Monomial, LaurentScalar]:
        """Coefficients on the carrier basis, read at the free monomials."""
        return {m: element.terms[m] for m in self.vectors if m in element.terms}

    def render(self) -> Tuple[str, ...]:
        return tuple(element.render() for element in self.elements())


def _degree_drop(matrix: OperatorMatrix) -> int:
    drop = 0
    for i, row in enumerate(matrix.entries):
        row_degree = monomial_degree(matrix.basis[i])
        for j, value in enumerate(row):
            if value:
                drop = max(drop, monomial_degree(matrix.basis[j]) - row_degree)
    return drop


def _acting_algebra(triplet: HopfTriplet, character: Character):
    if character.algebra is not triplet.algebra:
        raise InductionError(
            f'Character lives on {character.algebra.name}, the triplet acts with {triplet.algebra.name}'
        )
    return triplet.algebra


def solve_equivariance(
    triplet: HopfTriplet,
    character: Character,
    side='left',
    degree: Optional[int] = None,
) -> CarrierBasis:
    """
    Carrier of the representation induced from ``character``.

    Solves (s . f) = chi(s) f on all components of degree <= D' - d, where D'
    is the solve degree and d the largest degree drop of the subalgebra
    actions. An empty solution space is returned as an empty carrier.

    Raises:
        CharacterError: the character is not valid for the triplet.
        InductionError: the character belongs to another algebra.
    """
    side = InductionSide.parse(side)
    algebra = _acting_algebra(triplet, character)
    validate_character(character)
    target = triplet.dual
    bound = target.context.degree if degree is None else degree
    solve_degree = max(target.internal_cap(bound), bound)
    basis = enumerate_basis(target.size, solve_degree)
    kind = side.equivariance_kind

    matrices = {
        name: operator_matrix(kind, algebra.generator(name), solve_degree) for name in character.generators
    }
    drop = max((_degree_drop(matrix) for matrix in matrices.values()), default=0)
    rows = []
    for name, matrix in matrices.items():
        value = character.value(name).retruncate(target.context.zorder)
        for i, monomial in enumerate(basis):
            if monomial_degree(monomial) > solve_degree - drop:
                continue
            row = {j: entry for j, entry in enumerate(matrix.entries[i]) if entry}
            diagonal = row.get(i, target.scalar(0)) - value
            if diagonal:
                row[i] = diagonal
            else:
                row.pop(i, None)
            if row:
                rows.append(row)

    solutions = nullspace(rows, len(basis), tuple(reversed(range(len(basis)))), target.context.zorder)
    vectors = {
        basis[free]: {basis[j]: value for j, value in sorted(vector.items())}
        for free, vector in sorted(solutions.items())
    }
    carrier = CarrierBasis(target, character, side, bound, solve_degree, drop, vectors)
    logger.info(
        f'Carrier of {character} ({side.value} side) on {target.name} at D={bound}: '
        f'dimension {len(carrier)} (solved at degree {solve_degree}, drop {drop})'
    )
    return carrier


def induced_action(carrier: CarrierBasis, h: AlgebraElement) -> OperatorMatrix:
    """
    Matrix of ``h`` on the carrier, through the coregular action opposite to
    the one used for equivariance.

    Columns whose image has coordinates on free monomials above D are flagged
    as boundary columns.

    Raises:
        InductionError: ``h`` does not act on the carrier's algebra.
    """
    target = carrier.algebra
    if h.algebra is not getattr(target, 'dual', None):
        raise InductionError(f'{h.algebra.name} does not act on a carrier in {target.name}')
    kind = carrier.side.induced_kind
    monomials = carrier.monomials
    columns = []
    boundary = []
    for j, monomial in enumerate(monomials):
        image = act(kind, h, carrier.full_element(monomial), carrier.solve_degree)
        coordinates = carrier.coordinates(image)
        columns.append({m: c for m, c in coordinates.items() if monomial_degree(m) <= carrier.degree})
        if any(monomial_degree(m) > carrier.degree for m in coordinates):
            boundary.append(j)
    return OperatorMatrix.from_columns(
        target,
        carrier.degree,
        target.context.zorder,
        columns,
        boundary,
        (),
        f'{kind.value}({h.render()})',
        basis=monomials,
    )


@dataclass(frozen=True)
class InducedRep:
    carrier: CarrierBasis
    character: Character
    matrices: Dict[str, OperatorMatrix]
    gauge: Dict[str, LaurentScalar] = field(default_factory=dict)

    @property
    def side(self) -> InductionSide:
        return self.carrier.side

    def matrix(self, name: str) -> OperatorMatrix:
        try:
            return self.matrices[name]
        except KeyError:
            raise InductionError(f'No induced matrix for {name}') from None

    def first_difference(self, other: 'InducedRep') -> Optional[str]:
        """First differing matrix entry as ``'G: row ; column'``, or a carrier/label mismatch."""
        if self.carrier.monomials != other.carrier.monomials:
            return 'carrier bases differ'
        for name, matrix in self.matrices.items():
            if name not in other.matrices:
                return f'{name}: missing'
            difference = matrix.first_difference(other.matrices[name], skip=())
            if difference:
                return f'{name}: {difference}'
        return None

    def same_as(self, other: 'InducedRep') -> bool:
        return (
            self.first_difference(other) is None
            and self.character.values == other.character.values
            and self.gauge == other.gauge
        )

    def to_dict(self) -> dict:
        parameter = self.carrier.algebra.parameter
        result = {
            'character': self.character.labels(),
            'side': self.side.value,
            'carrier': list(self.carrier.render()),
            'generators': {name: matrix.to_dict() for name, matrix in self.matrices.items()},
            'boundary_columns': {name: sorted(m.boundary_columns) for name, m in self.matrices.items()},
        }
        if self.gauge:
            result['gauge'] = {name: value.render(parameter) for name, value in self.gauge.items()}
        return result

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def induce(triplet: HopfTriplet, character: Character, side='left', degree: Optional[int] = None) -> InducedRep:
    """Carrier plus the induced matrix of every generator of the acting algebra."""
    carrier = solve_equivariance(triplet, character, side, degree)
    algebra = triplet.algebra
    matrices = {name: induced_action(carrier, algebra.generator(name)) for name in algebra.generators}
    flagged = {name: len(m.boundary_columns) for name, m in matrices.items() if m.boundary_columns}
    if flagged:
        logger.debug(f'Induced matrices with boundary columns: {flagged}')
    return InducedRep(carrier, character, matrices)


def _as_scalar(value, zorder: int) -> LaurentScalar:
    if isinstance(value, LaurentScalar):
        return value.retruncate(zorder)
    return LaurentScalar.constant(Fraction(value), zorder)


def gauge_shift(rep: InducedRep, generator: str, amount) -> InducedRep:
    """
    Replace M(g) by M(g) - c * 1.

    The character value of g moves by -c when g is in the subalgebra;
    otherwise the shift is kept in ``gauge``.
    """
    matrix = rep.matrix(generator)
    amount = _as_scalar(amount, matrix.zorder)
    identity = OperatorMatrix.identity(matrix.algebra, matrix.degree, matrix.zorder, matrix.basis)
    matrices = dict(rep.matrices)
    matrices[generator] = matrix - identity.scale(amount)
    character = rep.character
    gauge = dict(rep.gauge)
    if generator in character.generators:
        character = character.shifted(generator, amount)
    else:
        total = gauge.get(generator, LaurentScalar.zero(matrix.zorder)) + amount
        if total:
            gauge[generator] = total
        else:
            gauge.pop(generator, None)
    return InducedRep(rep.carrier, character, matrices, gauge)


@dataclass(frozen=True)
class RescaleReport:
    equivalent: bool
    difference: str = ''

    def __bool__(self) -> bool:
        return self.equivalent


def rescale(rep: InducedRep, generator: str, factor) -> Dict[str, OperatorMatrix]:
    """
    Matrices after f -> factor * f on the partner coordinate of ``generator``
    (a diagonal change of carrier basis) and ``generator`` -> generator / factor.
    """
    carrier = rep.carrier
    dual = carrier.algebra
    partner = dual.index(dual.pairing.partner(generator))
    rescaled = {}
    for name, matrix in rep.matrices.items():
        zorder = matrix.zorder
        rows = []
        for i, row in enumerate(matrix.entries):
            exponent_row = matrix.basis[i][partner]
            rows.append(
                [
                    value * Fraction(factor) ** (exponent_row - matrix.basis[j][partner]) if value else value
                    for j, value in enumerate(row)
                ]
            )
        result = OperatorMatrix(
            matrix.algebra,
            matrix.degree,
            zorder,
            matrix.basis,
            tuple(tuple(row) for row in rows),
            matrix.boundary_columns,
            matrix.boundary_rows,
            matrix.label,
        )
        if name == generator:
            result = result.scale(Fraction(1) / Fraction(factor))
        rescaled[name] = result
    return rescaled


def rescale_check(
    triplet: HopfTriplet,
    first: Character,
    second: Character,
    factor,
    generator: str = 'Pm',
    side='left',
    degree: Optional[int] = None,
) -> RescaleReport:
    """
    Whether the rep of ``first``, rescaled by ``factor`` along ``generator``,
    has exactly the matrices of the rep of ``second``.

    Raises:
        InductionError: ``factor`` is zero.
    """
    if not Fraction(factor):
        raise InductionError('Rescaling factor must be non-zero')
    rep1 = induce(triplet, first, side, degree)
    rep2 = induce(triplet, second, side, degree)
    if rep1.carrier.monomials != rep2.carrier.monomials:
        return RescaleReport(False, 'carrier bases differ')
    rescaled = rescale(rep1, generator, factor)
    for name, matrix in rescaled.items():
        difference = matrix.first_difference(rep2.matrix(name), skip=())
        if difference:
            logger.info(f'Rescaled {first} differs from {second} at {name}: {difference}')
            return RescaleReport(False, f'{name}: {difference}')
    logger.info(f'{first} rescaled by {factor} along {generator} matches {second}')
    return RescaleReport(True)

