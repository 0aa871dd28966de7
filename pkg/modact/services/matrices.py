"""
Finite matrices of actions and formal operators on the truncated PBW basis.

Matrices act on coordinate columns and compose right to left: ``a @ b`` is
"apply b, then a". Entries are always exact; what truncation loses is the
part of an image that lands above degree D. A column whose image reaches
above D is a *boundary column*; a row that receives contributions from
monomials above D is a *boundary row*. Both are tracked through
composition and swapped by the pairing adjoint, and comparisons skip
boundary columns.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, FrozenSet, Literal, Optional, Sequence, Tuple

from freealg.services.elements import AlgebraElement
from freealg.services.monomials import (
    Monomial,
    degree as monomial_degree,
    enumerate_basis,
    multi_factorial,
    render_monomial,
    shift,
)
from modact.exceptions import MatrixError
from modact.services.actions import ActionKind, act_raw, target_algebra
from scalars.services.laurent import LaurentScalar

logger = logging.getLogger(__name__)

OperatorKind = Literal['multiply', 'derivative']


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """
    A linear map on PBW monomials of degree <= ``degree`` of ``algebra``: all of
    them, or the free monomials of an induction carrier.

    ``entries[row][column]`` is the coefficient of ``basis[row]`` in the image
    of ``basis[column]``.
    """

    algebra: object
    degree: int
    zorder: int
    basis: Tuple[Monomial, ...]
    entries: Tuple[Tuple[LaurentScalar, ...], ...]
    boundary_columns: FrozenSet[int] = frozenset()
    boundary_rows: FrozenSet[int] = frozenset()
    label: str = ''
    _index: Dict[Monomial, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {m: i for i, m in enumerate(self.basis)})

    # Construction

    @classmethod
    def from_columns(
        cls,
        algebra,
        degree: int,
        zorder: int,
        columns: Sequence[Dict[Monomial, LaurentScalar]],
        boundary_columns=(),
        boundary_rows=(),
        label: str = '',
        basis: Optional[Sequence[Monomial]] = None,
    ) -> 'OperatorMatrix':
        """Assemble from column images; ``basis`` defaults to every monomial of degree <= ``degree``."""
        basis = enumerate_basis(algebra.size, degree) if basis is None else tuple(basis)
        index = {m: i for i, m in enumerate(basis)}
        zero = LaurentScalar.zero(zorder)
        rows = [[zero] * len(basis) for _ in basis]
        for j, column in enumerate(columns):
            for monomial, value in column.items():
                i = index.get(monomial)
                if i is not None and value:
                    rows[i][j] = _at_order(value, zorder)
        return cls(
            algebra,
            degree,
            zorder,
            basis,
            tuple(tuple(row) for row in rows),
            frozenset(boundary_columns),
            frozenset(boundary_rows),
            label,
        )

    @classmethod
    def identity(cls, algebra, degree: int, zorder: Optional[int] = None, basis=None) -> 'OperatorMatrix':
        zorder = algebra.context.zorder if zorder is None else zorder
        basis = enumerate_basis(algebra.size, degree) if basis is None else tuple(basis)
        one = LaurentScalar.one(zorder)
        return cls.from_columns(algebra, degree, zorder, [{m: one} for m in basis], label='1', basis=basis)

    @classmethod
    def zero(cls, algebra, degree: int, zorder: Optional[int] = None, basis=None) -> 'OperatorMatrix':
        zorder = algebra.context.zorder if zorder is None else zorder
        basis = enumerate_basis(algebra.size, degree) if basis is None else tuple(basis)
        return cls.from_columns(algebra, degree, zorder, [{} for _ in basis], label='0', basis=basis)

    # Inspection

    @property
    def size(self) -> int:
        return len(self.basis)

    def index(self, monomial: Monomial) -> int:
        try:
            return self._index[tuple(monomial)]
        except KeyError:
            raise MatrixError(f'Monomial {monomial} is not in the degree-{self.degree} basis') from None

    def entry(self, row: Monomial, column: Monomial) -> LaurentScalar:
        return self.entries[self.index(row)][self.index(column)]

    def column(self, j: int) -> Dict[Monomial, LaurentScalar]:
        return {self.basis[i]: row[j] for i, row in enumerate(self.entries) if row[j]}

    def image(self, monomial: Monomial) -> AlgebraElement:
        """Column of ``monomial`` as an element of the algebra."""
        return self.algebra.element(self.column(self.index(monomial)))

    def is_zero(self) -> bool:
        return not any(value for row in self.entries for value in row)

    def reliable_columns(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.size) if j not in self.boundary_columns)

    # Arithmetic

    def _check(self, other: 'OperatorMatrix') -> None:
        if not isinstance(other, OperatorMatrix):
            raise MatrixError(f'Cannot combine an operator matrix with {type(other).__name__}')
        if other.algebra is not self.algebra or other.degree != self.degree or other.basis != self.basis:
            raise MatrixError(
                f'Operator matrices on {self.algebra.name} (D={self.degree}) and '
                f'{other.algebra.name} (D={other.degree}) do not share a basis'
            )
        if other.zorder != self.zorder:
            raise MatrixError(f'Operator matrices of parameter order {self.zorder} and {other.zorder}')

    def _rebuild(self, entries, boundary_columns, boundary_rows, label) -> 'OperatorMatrix':
        return OperatorMatrix(
            self.algebra,
            self.degree,
            self.zorder,
            self.basis,
            tuple(tuple(row) for row in entries),
            frozenset(boundary_columns),
            frozenset(boundary_rows),
            label,
        )

    def __add__(self, other: 'OperatorMatrix') -> 'OperatorMatrix':
        self._check(other)
        entries = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        return self._rebuild(
            entries,
            self.boundary_columns | other.boundary_columns,
            self.boundary_rows | other.boundary_rows,
            f'({self.label} + {other.label})',
        )

    def __neg__(self) -> 'OperatorMatrix':
        return self.scale(-1)

    def __sub__(self, other: 'OperatorMatrix') -> 'OperatorMatrix':
        return self + (-other)

    def scale(self, value) -> 'OperatorMatrix':
        """Multiply every entry by an int, Fraction or scalar of the same order."""
        if isinstance(value, LaurentScalar) and value.order != self.zorder:
            raise MatrixError(f'Scalar of order {value.order} on a matrix of order {self.zorder}')
        entries = [[entry * value for entry in row] for row in self.entries]
        text = value.render(self.algebra.parameter) if isinstance(value, LaurentScalar) else str(value)
        return self._rebuild(entries, self.boundary_columns, self.boundary_rows, f'{text}*{self.label}')

    def __matmul__(self, other: 'OperatorMatrix') -> 'OperatorMatrix':
        """Composition: apply ``other`` first."""
        self._check(other)
        n = self.size
        zero = LaurentScalar.zero(self.zorder)
        entries = [[zero] * n for _ in range(n)]
        for k in range(n):
            right_row = other.entries[k]
            targets = [j for j in range(n) if right_row[j]]
            if not targets:
                continue
            for i in range(n):
                left = self.entries[i][k]
                if not left:
                    continue
                row = entries[i]
                for j in targets:
                    row[j] = row[j] + left * right_row[j]
        boundary_columns = set(other.boundary_columns)
        for k in self.boundary_columns:
            boundary_columns.update(j for j in range(n) if other.entries[k][j])
        boundary_rows = set(self.boundary_rows)
        for k in other.boundary_rows:
            boundary_rows.update(i for i in range(n) if self.entries[i][k])
        return self._rebuild(entries, boundary_columns, boundary_rows, f'{self.label} {other.label}'.strip())

    compose = __matmul__

    def __pow__(self, exponent: int) -> 'OperatorMatrix':
        if exponent < 0:
            raise MatrixError('Negative matrix powers are not supported')
        result = OperatorMatrix.identity(self.algebra, self.degree, self.zorder, self.basis)
        for _ in range(exponent):
            result = self @ result
        return result

    def retruncate(self, zorder: int) -> 'OperatorMatrix':
        """Re-express every entry at another parameter order."""
        entries = [[entry.retruncate(zorder) for entry in row] for row in self.entries]
        return OperatorMatrix(
            self.algebra,
            self.degree,
            zorder,
            self.basis,
            tuple(tuple(row) for row in entries),
            self.boundary_columns,
            self.boundary_rows,
            self.label,
        )

    def restrict(self, degree: int) -> 'OperatorMatrix':
        """
        The block on monomials of degree <= ``degree``.

        Columns whose image reaches the dropped rows become boundary columns,
        rows fed from the dropped columns become boundary rows.
        """
        if degree > self.degree:
            raise MatrixError(f'Cannot restrict a degree-{self.degree} matrix to degree {degree}')
        kept = [i for i, m in enumerate(self.basis) if monomial_degree(m) <= degree]
        dropped = [i for i, m in enumerate(self.basis) if monomial_degree(m) > degree]
        position = {old: new for new, old in enumerate(kept)}
        boundary_columns = {position[j] for j in kept if j in self.boundary_columns}
        boundary_columns.update(position[j] for j in kept if any(self.entries[i][j] for i in dropped))
        boundary_rows = {position[i] for i in kept if i in self.boundary_rows}
        boundary_rows.update(position[i] for i in kept if any(self.entries[i][j] for j in dropped))
        return OperatorMatrix(
            self.algebra,
            degree,
            self.zorder,
            tuple(self.basis[i] for i in kept),
            tuple(tuple(self.entries[i][j] for j in kept) for i in kept),
            frozenset(boundary_columns),
            frozenset(boundary_rows),
            self.label,
        )

    def apply(self, element: AlgebraElement) -> AlgebraElement:
        """Image of an element; monomials above degree D are ignored."""
        terms: dict = {}
        for monomial, coefficient in element.terms.items():
            j = self._index.get(monomial)
            if j is None:
                continue
            coefficient = _at_order(coefficient, self.zorder)
            for i, row in enumerate(self.entries):
                if row[j]:
                    key = self.basis[i]
                    total = terms.get(key, LaurentScalar.zero(self.zorder)) + row[j] * coefficient
                    if total:
                        terms[key] = total
                    else:
                        terms.pop(key, None)
        return AlgebraElement(self.algebra, {m: _at_order(c, self.algebra.context.zorder) for m, c in terms.items()})

    # Comparison

    def first_difference(self, other: 'OperatorMatrix', skip=None) -> Optional[str]:
        """
        The first (row, column) where two matrices disagree.

        Args:
            skip: Column indices to ignore; by default the boundary columns of both.

        Returns:
            ``'row ; column'`` in monomial notation, or None when they agree.
        """
        self._check(other)
        if skip is None:
            ignored = self.boundary_columns | other.boundary_columns
        else:
            ignored = frozenset(skip)
        names = self.algebra.generators
        for j in range(self.size):
            if j in ignored:
                continue
            for i in range(self.size):
                if self.entries[i][j] != other.entries[i][j]:
                    return f'{render_monomial(self.basis[i], names)} ; {render_monomial(self.basis[j], names)}'
        return None

    def equals_on(self, other: 'OperatorMatrix', skip=None) -> bool:
        return self.first_difference(other, skip) is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return (
            other.algebra is self.algebra
            and other.degree == self.degree
            and other.zorder == self.zorder
            and other.entries == self.entries
            and other.boundary_columns == self.boundary_columns
        )

    __hash__ = None

    # Serialisation

    def to_dict(self) -> dict:
        names = self.algebra.generators
        parameter = self.algebra.parameter
        return {
            'basis': [render_monomial(m, names) for m in self.basis],
            'entries': [[entry.render(parameter) for entry in row] for row in self.entries],
            'boundary_columns': sorted(self.boundary_columns),
        }

    def __repr__(self) -> str:
        return f'OperatorMatrix({self.label or "?"} on {self.algebra.name}, D={self.degree}, Z={self.zorder})'


def _at_order(value, zorder: int) -> LaurentScalar:
    if isinstance(value, LaurentScalar):
        return value.retruncate(zorder)
    return LaurentScalar.constant(Fraction(value), zorder)


# Matrices of actions

def operator_matrix(kind, h: AlgebraElement, degree: Optional[int] = None) -> OperatorMatrix:
    """
    Matrix of ``f -> action(h, f)`` on the degree-<=D basis of the target algebra.

    Column j is the image of basis monomial j truncated at D. Columns whose
    image was cut are flagged in ``boundary_columns``; rows reached from
    monomials of degree D+1 .. D+max(1, deg h) are flagged in
    ``boundary_rows``.

    Raises:
        ActionError: as ``act``.
    """
    kind = ActionKind.parse(kind)
    target = target_algebra(kind, h.algebra)
    bound = target.context.degree if degree is None else degree
    basis = enumerate_basis(target.size, bound)

    columns = []
    boundary_columns = []
    for j, monomial in enumerate(basis):
        image, overflow = act_raw(kind, h, target.monomial(monomial), bound)
        columns.append(image.terms)
        if overflow:
            boundary_columns.append(j)

    reach = bound + max(1, h.degree)
    reach = min(reach, target.working_degree)
    index = {m: i for i, m in enumerate(basis)}
    boundary_rows = set()
    for monomial in enumerate_basis(target.size, reach):
        if monomial_degree(monomial) <= bound:
            continue
        image, _ = act_raw(kind, h, target.monomial(monomial), bound)
        boundary_rows.update(index[m] for m in image.terms)

    label = f'{kind.value}({h.render()})'
    if boundary_columns:
        logger.debug(f'{label} on {target.name}: {len(boundary_columns)} boundary columns at D={bound}')
    return OperatorMatrix.from_columns(
        target,
        bound,
        target.context.zorder,
        columns,
        boundary_columns,
        boundary_rows,
        label,
    )


def adjoint_matrix(matrix: OperatorMatrix) -> OperatorMatrix:
    """
    Pairing adjoint: <h, A^dagger f> = <A h, f> with <h_l, f_m> = l! delta_lm.

    The result acts on the paired algebra; boundary rows and columns swap.

    Raises:
        MatrixError: the algebra has no paired algebra.
    """
    algebra = matrix.algebra
    dual = getattr(algebra, 'dual', None)
    if dual is None:
        raise MatrixError(f'{algebra.name} has no paired algebra to take an adjoint into')
    n = matrix.size
    weights = [multi_factorial(m) for m in matrix.basis]
    zero = LaurentScalar.zero(matrix.zorder)
    entries = [[zero] * n for _ in range(n)]
    for l in range(n):
        for m in range(n):
            value = matrix.entries[l][m]
            if value:
                entries[m][l] = value * Fraction(weights[l], weights[m])
    label = f'{matrix.label}^dagger' if matrix.label else 'dagger'
    return OperatorMatrix(
        dual,
        matrix.degree,
        matrix.zorder,
        matrix.basis,
        tuple(tuple(row) for row in entries),
        matrix.boundary_rows,
        matrix.boundary_columns,
        label,
    )


def basis_operator(
    which: OperatorKind,
    generator,
    algebra,
    degree: Optional[int] = None,
    zorder: Optional[int] = None,
) -> OperatorMatrix:
    """
    Formal operator on ordered monomials: raise one exponent (``multiply``)
    or multiply by that exponent and lower it (``derivative``).

    ``multiply`` is the bar operator: it shifts the exponent in place and
    never reorders, so it is algebra multiplication only for commuting
    generators.
    """
    if which not in ('multiply', 'derivative'):
        raise MatrixError(f'Unknown basis operator {which!r}; expected multiply or derivative')
    index = algebra.index(generator)
    bound = algebra.context.degree if degree is None else degree
    zorder = algebra.context.zorder if zorder is None else zorder
    basis = enumerate_basis(algebra.size, bound)
    columns = []
    boundary_columns = []
    boundary_rows = []
    for j, monomial in enumerate(basis):
        if which == 'multiply':
            if monomial_degree(monomial) == bound:
                boundary_columns.append(j)
                columns.append({})
            else:
                columns.append({shift(monomial, index, 1): LaurentScalar.one(zorder)})
        else:
            exponent = monomial[index]
            columns.append(
                {shift(monomial, index, -1): LaurentScalar.constant(exponent, zorder)} if exponent else {}
            )
            if monomial_degree(monomial) == bound:
                boundary_rows.append(j)
    prefix = 'bar ' if which == 'multiply' else 'd/d'
    return OperatorMatrix.from_columns(
        algebra,
        bound,
        zorder,
        columns,
        boundary_columns,
        boundary_rows,
        f'{prefix}{algebra.generators[index]}',
    )


# Series of nilpotent matrices

SeriesKind = Literal['exp', 'log1p', 'geom']


def matrix_series(kind: SeriesKind, matrix: OperatorMatrix) -> OperatorMatrix:
    """
    exp / log1p / geometric series of a matrix whose powers vanish on the basis.

    Raises:
        MatrixError: unknown kind, or no power vanishes within the basis size.
    """
    if kind not in ('exp', 'log1p', 'geom'):
        raise MatrixError(f'Unknown series kind {kind!r}')
    identity = OperatorMatrix.identity(matrix.algebra, matrix.degree, matrix.zorder, matrix.basis)
    result = OperatorMatrix.zero(matrix.algebra, matrix.degree, matrix.zorder, matrix.basis) if kind == 'log1p' else identity
    power = identity
    for k in range(1, matrix.size + 2):
        power = matrix @ power
        if power.is_zero():
            # Boundary flags of vanished powers still describe lost images.
            result = OperatorMatrix(
                result.algebra,
                result.degree,
                result.zorder,
                result.basis,
                result.entries,
                result.boundary_columns | power.boundary_columns,
                result.boundary_rows | power.boundary_rows,
                f'{kind}({matrix.label})',
            )
            return result
        if kind == 'exp':
            result = result + power.scale(Fraction(1, factorial(k)))
        elif kind == 'log1p':
            result = result + power.scale(Fraction(1 if k % 2 else -1, k))
        else:
            result = result + power
    raise MatrixError(f'{kind} series of {matrix.label or "matrix"} does not terminate on the degree-{matrix.degree} basis')


def matrix_exp(matrix: OperatorMatrix) -> OperatorMatrix:
    return matrix_series('exp', matrix)


def matrix_log1p(matrix: OperatorMatrix) -> OperatorMatrix:
    return matrix_series('log1p', matrix)


def matrix_geom(matrix: OperatorMatrix) -> OperatorMatrix:
    return matrix_series('geom', matrix)
