"""
Sparse exact row reduction over truncated Laurent scalars.

Rows are dicts ``column -> LaurentScalar``. Reduction is Gauss-Jordan with
columns visited in a caller-given order, so the first columns in that order
become pivots and the free columns are the last ones.
"""
from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Sequence

from induce.exceptions import InductionError
from scalars.services.laurent import LaurentScalar

logger = logging.getLogger(__name__)

Row = Dict[int, LaurentScalar]


def _subtract(target: Row, pivot_row: Row, factor: LaurentScalar) -> None:
    """``target -= factor * pivot_row`` in place."""
    for column, value in pivot_row.items():
        total = target.get(column)
        product = value * factor
        total = -product if total is None else total - product
        if total:
            target[column] = total
        else:
            target.pop(column, None)


def reduce_rows(rows: Iterable[Row], order: Sequence[int]) -> Dict[int, Row]:
    """
    Reduced echelon form.

    Every pivot must be a unit, a scalar of valuation 0; a pivot divisible
    by the parameter raises ``InductionError``.

    Returns:
        ``{pivot column: row}`` where each row is 1 at its pivot and carries
        no other pivot column.
    """
    remaining: List[Row] = [dict(row) for row in rows if row]
    pivots: Dict[int, Row] = {}
    for column in order:
        candidates = [k for k, row in enumerate(remaining) if column in row]
        if not candidates:
            continue
        chosen = min(candidates, key=lambda k: (remaining[k][column].valuation, len(remaining[k])))
        row = remaining.pop(chosen)
        lead = row[column]
        if lead.valuation > 0:
            raise InductionError(
                f'Pivot on column {column} has parameter valuation {lead.valuation}; '
                f'inverting it would lose the top {lead.valuation} parameter orders'
            )
        inverse = lead.invert()
        row = {c: v * inverse for c, v in row.items()}
        row = {c: v for c, v in row.items() if v}
        row[column] = LaurentScalar.one(lead.order)
        for other in remaining:
            if column in other:
                _subtract(other, row, other[column])
        for other in pivots.values():
            if column in other:
                _subtract(other, row, other[column])
        remaining = [other for other in remaining if other]
        pivots[column] = row
    return pivots


def nullspace(rows: Iterable[Row], size: int, order: Sequence[int], zorder: int) -> Dict[int, Row]:
    """
    Basis of the solutions of ``row . x = 0`` for every row.

    Returns:
        ``{free column: vector}``; each vector is 1 at its own free column and
        0 at every other free column.
    """
    pivots = reduce_rows(rows, order)
    one = LaurentScalar.one(zorder)
    basis: Dict[int, Row] = {}
    for free in range(size):
        if free in pivots:
            continue
        vector: Row = {free: one}
        for pivot, row in pivots.items():
            value = row.get(free)
            if value:
                vector[pivot] = -value
        basis[free] = vector
    logger.debug(f'Nullspace: {size} unknowns, rank {len(pivots)}, dimension {len(basis)}')
    return basis


def rank(rows: Iterable[Row], order: Sequence[int]) -> int:
    return len(reduce_rows(rows, order))
