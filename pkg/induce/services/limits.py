"""
Classical limit: the deformation parameter set to 0.
"""
from __future__ import annotations

import logging

from freealg.services.elements import AlgebraElement, TensorElement
from induce.exceptions import LimitError
from induce.services.characters import Character
from induce.services.induction import CarrierBasis, InducedRep
from modact.services.matrices import OperatorMatrix
from presentation.services.structures import HopfPresentation, HopfTriplet, link
from scalars.exceptions import PoleError
from scalars.services.laurent import LaurentScalar

logger = logging.getLogger(__name__)


def scalar_limit(value: LaurentScalar, where: str = '') -> LaurentScalar:
    """The constant ``value(0)`` at the same order."""
    try:
        constant = value.substitute(0)
    except PoleError:
        raise LimitError(f'{where or "Scalar"} has a pole at parameter value 0: {value}') from None
    return LaurentScalar.constant(constant, value.order)


def _limit_terms(terms: dict, where: str) -> dict:
    result = {}
    for key, value in terms.items():
        limit = scalar_limit(value, where)
        if limit:
            result[key] = limit
    return result


def _limit_presentation(algebra: HopfPresentation) -> HopfPresentation:
    result = HopfPresentation(algebra.name, algebra.generators, algebra.parameter, algebra.context)
    result.relation_pairs = algebra.relation_pairs
    names = algebra.generators
    for j, i in algebra.commutator_pairs():
        where = f'[{names[j]}, {names[i]}] in {algebra.name}'
        result.set_commutator(j, i, AlgebraElement(result, _limit_terms(algebra.commutator_terms(j, i), where)))
    for index, tensor in algebra.coproducts.items():
        where = f'Coproduct of {names[index]}'
        result.coproducts[index] = TensorElement(result, _limit_terms(tensor.terms, where))
    result.counits = dict(algebra.counits)
    for index, element in algebra.antipodes.items():
        where = f'Antipode of {names[index]}'
        result.antipodes[index] = AlgebraElement(result, _limit_terms(element.terms, where))
    return result


def classical_limit(triplet: HopfTriplet) -> HopfTriplet:
    """
    Substitute parameter = 0 in every commutator, coproduct and antipode.

    The result keeps the truncation (D, Z) so its scalars combine with those
    of the original.

    Raises:
        LimitError: a structure constant has a negative parameter power.
    """
    algebra = _limit_presentation(triplet.algebra)
    dual = _limit_presentation(triplet.dual)
    link(algebra, dual, triplet.pairing)
    logger.info(f'Classical limit of {algebra.name}/{dual.name} at D={triplet.context.degree}')

    def builder(degree, zorder):
        return classical_limit(triplet.with_truncation(degree, zorder))

    return HopfTriplet(algebra, dual, triplet.pairing, builder=builder)


def _limit_matrix(matrix: OperatorMatrix, algebra, name: str) -> OperatorMatrix:
    entries = tuple(
        tuple(scalar_limit(value, f'Entry of {name}') if value else value for value in row)
        for row in matrix.entries
    )
    return OperatorMatrix(
        algebra,
        matrix.degree,
        matrix.zorder,
        matrix.basis,
        entries,
        matrix.boundary_columns,
        matrix.boundary_rows,
        matrix.label,
    )


def classical_limit_rep(rep: InducedRep, limit_triplet: HopfTriplet) -> InducedRep:
    """
    Entry-wise parameter -> 0 limit of an induced representation, rebound to
    the algebras of ``limit_triplet``.

    Raises:
        LimitError: an entry or character value has a pole at 0.
    """
    dual = limit_triplet.dual
    carrier = rep.carrier
    vectors = {
        free: _limit_terms(vector, 'Carrier coefficient') for free, vector in carrier.vectors.items()
    }
    character = Character(
        limit_triplet.algebra,
        tuple((name, scalar_limit(value, f'Character value of {name}')) for name, value in rep.character.values),
    )
    limit_carrier = CarrierBasis(
        dual, character, carrier.side, carrier.degree, carrier.solve_degree, carrier.drop, vectors
    )
    matrices = {name: _limit_matrix(matrix, dual, name) for name, matrix in rep.matrices.items()}
    gauge = {name: scalar_limit(value) for name, value in rep.gauge.items()}
    return InducedRep(limit_carrier, character, matrices, {k: v for k, v in gauge.items() if v})
