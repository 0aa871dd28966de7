"""
Elaboration: evaluate a parsed presentation into canonical PBW data.

Right-hand sides are evaluated at parameter order 2Z + 2 and re-truncated
to Z, so a ``1/z`` prefactor in front of a series of valuation >= 1 keeps
every coefficient through z^Z.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Union

from freealg.exceptions import AlgebraError, MixedAlgebraError
from freealg.services.context import TruncationContext
from freealg.services.elements import AlgebraElement, TensorElement
from freealg.services.monomials import degree, letters, unit
from freealg.services.series import analytic_series
from presentation.exceptions import PresentationError, WellFoundednessError
from presentation.services.ast import (
    AlgebraBlock,
    BinaryOp,
    Call,
    Expr,
    Name,
    Number,
    Power,
    PresentationAST,
    UnaryMinus,
    walk,
)
from presentation.services.parser import parse_expression_ast
from presentation.services.structures import HopfPresentation, HopfTriplet, PairingDecl, link
from scalars.exceptions import ScalarError

logger = logging.getLogger(__name__)

Value = Union[AlgebraElement, TensorElement]


class ExpressionEvaluator:
    """Evaluates expression trees inside one algebra."""

    def __init__(self, algebra: HopfPresentation):
        self.algebra = algebra

    def evaluate(self, node: Expr) -> Value:
        try:
            return self._evaluate(node)
        except PresentationError:
            raise
        except (AlgebraError, ScalarError) as exc:
            raise PresentationError(str(exc), node.line or None, node.column or None) from exc

    def _fail(self, node: Expr, message: str):
        raise PresentationError(message, node.line or None, node.column or None)

    def _evaluate(self, node: Expr) -> Value:
        algebra = self.algebra
        if isinstance(node, Number):
            return algebra.constant(node.value)
        if isinstance(node, Name):
            if node.ident == algebra.parameter:
                return algebra.constant(algebra.parameter_scalar())
            if not algebra.has_generator(node.ident):
                self._fail(node, f'Undeclared name {node.ident!r} in algebra {algebra.name}')
            return algebra.generator(node.ident)
        if isinstance(node, UnaryMinus):
            return -self._evaluate(node.operand)
        if isinstance(node, Power):
            return self._power(node)
        if isinstance(node, Call):
            argument = self._evaluate(node.argument)
            if not isinstance(argument, AlgebraElement):
                self._fail(node, f'{node.function} of a tensor is not defined')
            try:
                return analytic_series(node.function, argument)
            except AlgebraError as exc:
                self._fail(node, f'{node.function} argument: {exc}')
        if isinstance(node, BinaryOp):
            return self._binary(node)
        self._fail(node, f'Unsupported expression {node!r}')

    def _power(self, node: Power) -> Value:
        base = self._evaluate(node.base)
        if isinstance(base, AlgebraElement):
            return base ** node.exponent
        if node.exponent == 0:
            return TensorElement.from_pair(self.algebra.one(), self.algebra.one())
        result = base
        for _ in range(node.exponent - 1):
            result = result * base
        return result

    def _binary(self, node: BinaryOp) -> Value:
        left = self._evaluate(node.left)
        right = self._evaluate(node.right)
        op = node.op
        if op == '(x)':
            if not (isinstance(left, AlgebraElement) and isinstance(right, AlgebraElement)):
                self._fail(node, 'Tensor legs must be algebra elements')
            return TensorElement.from_pair(left, right)
        if op in ('+', '-'):
            if type(left) is not type(right):
                self._fail(node, 'Cannot add an algebra element and a tensor')
            return left + right if op == '+' else left - right
        if op == '/':
            if not (isinstance(right, AlgebraElement) and right.is_scalar()):
                self._fail(node, 'Division is only defined by scalar expressions')
            divisor = right.constant_term()
            if not divisor:
                self._fail(node, 'Division by zero')
            return left.scale(divisor.invert())
        # op == '*'
        if isinstance(left, AlgebraElement) and isinstance(right, AlgebraElement):
            return left * right
        if isinstance(left, TensorElement) and isinstance(right, TensorElement):
            return left * right
        scalar, tensor = (left, right) if isinstance(left, AlgebraElement) else (right, left)
        if not scalar.is_scalar():
            self._fail(node, 'An algebra element times a tensor must be a scalar multiple')
        return tensor.scale(scalar.constant_term())


def _check_letters(algebra: HopfPresentation, block: AlgebraBlock) -> None:
    positions = {frozenset((r.left, r.right)): (r.line, r.column) for r in block.relations}
    for j, i in algebra.commutator_pairs():
        for monomial in algebra.commutator_terms(j, i):
            if degree(monomial) < 2:
                continue
            if any(letter < i or letter > j for letter in letters(monomial)):
                a, b = algebra.generators[j], algebra.generators[i]
                line, column = positions.get(frozenset((a, b)), (None, None))
                raise WellFoundednessError(
                    f'[{a}, {b}] has a term of degree {degree(monomial)} with letters '
                    f'outside {b}..{a}; normal ordering would not terminate',
                    line,
                    column,
                )


def _check_overlaps(algebra: HopfPresentation, block: AlgebraBlock, zorder: int) -> None:
    """Both reductions of every generator triple c > b > a must agree."""
    bound = algebra.context.degree
    size = algebra.size
    for c in range(size):
        for b in range(c):
            for a in range(b):
                route_a = AlgebraElement(algebra, algebra.normal_order_word((c, b, a)))
                route_b = AlgebraElement(
                    algebra,
                    algebra.multiply_terms(algebra.normal_order_word((c, b)), {unit(size, a): algebra.scalar(1)}),
                )
                difference = (route_a - route_b).truncate(bound).map_coefficients(
                    lambda value: value.retruncate(zorder)
                )
                if difference:
                    names = algebra.generators
                    raise WellFoundednessError(
                        f'Relations of {block.name} are inconsistent on {names[c]}*{names[b]}*{names[a]}: '
                        f'the two reductions differ by {difference.render()}',
                        block.line,
                        block.column,
                    )


def _elaborate_block(block: AlgebraBlock, final: TruncationContext) -> HopfPresentation:
    working = TruncationContext(final.degree, 2 * final.zorder + 2, final.guard_size)
    scratch = HopfPresentation(block.name, block.generators, block.parameter, working)
    evaluator = ExpressionEvaluator(scratch)
    scratch.mark_pending((r.left, r.right) for r in block.relations)
    for relation in block.relations:
        value = evaluator.evaluate(relation.expression)
        if not isinstance(value, AlgebraElement):
            raise PresentationError(
                f'Relation [{relation.left}, {relation.right}] must be an algebra element',
                relation.line,
                relation.column,
            )
        scratch.set_commutator(relation.left, relation.right, value)
    _check_letters(scratch, block)
    _check_overlaps(scratch, block, min(final.zorder + 1, working.zorder))

    result = HopfPresentation(block.name, block.generators, block.parameter, final)
    result.relation_pairs = tuple((r.left, r.right) for r in block.relations)

    def rebind(terms):
        return {key: result.scalar(value) for key, value in terms.items()}

    try:
        for j, i in scratch.commutator_pairs():
            result.set_commutator(j, i, AlgebraElement(result, rebind(scratch.commutator_terms(j, i))))
        for rule in block.coproduct:
            value = evaluator.evaluate(rule.expression)
            if not isinstance(value, TensorElement):
                raise PresentationError(
                    f'Coproduct of {rule.generator} must be a tensor', rule.line, rule.column
                )
            cap = result.working_degree
            result.coproducts[result.index(rule.generator)] = TensorElement(
                result, rebind(value.truncate(cap, cap, cap).terms)
            )
        for rule in block.counit:
            value = evaluator.evaluate(rule.expression)
            if not (isinstance(value, AlgebraElement) and value.is_scalar() and value.constant_term().is_constant()):
                raise PresentationError(
                    f'Counit of {rule.generator} must be a rational number', rule.line, rule.column
                )
            result.counits[result.index(rule.generator)] = Fraction(value.constant_term().coefficient(0))
        for rule in block.antipode:
            value = evaluator.evaluate(rule.expression)
            if not isinstance(value, AlgebraElement):
                raise PresentationError(
                    f'Antipode of {rule.generator} must be an algebra element', rule.line, rule.column
                )
            result.antipodes[result.index(rule.generator)] = AlgebraElement(result, rebind(value.terms))
    except ScalarError as exc:
        raise PresentationError(
            f'{block.name} needs a parameter order above {final.zorder}: {exc}', block.line, block.column
        ) from exc
    return result


def elaborate(ast: PresentationAST, degree: int, zorder: int) -> HopfTriplet:
    """
    Evaluate every relation, coproduct, counit and antipode of ``ast`` at (D, Z).

    Returns:
        HopfTriplet(algebra, dual, pairing), the algebra being the left side
        of the pairing block.

    Raises:
        PresentationError: non-nilpotent series argument, division by a
            non-scalar, or a non-rational counit.
        WellFoundednessError: relations that normal ordering cannot resolve.
    """
    context = TruncationContext.create(degree, zorder)
    pairing_block = ast.pairing
    algebra = _elaborate_block(ast.algebra(pairing_block.left), context)
    dual = _elaborate_block(ast.algebra(pairing_block.right), context)
    pairing = PairingDecl(pairing_block.left, pairing_block.right, tuple(pairing_block.pairs))
    link(algebra, dual, pairing)
    logger.info(
        f'Elaborated {algebra.name}/{dual.name} at D={degree}, Z={zorder} '
        f'(working degree {context.working_degree})'
    )
    return HopfTriplet(algebra, dual, pairing, builder=lambda d, z: elaborate(ast, d, z))


def parse_expression(source: str, presentation: Union[HopfPresentation, HopfTriplet], degree=None, zorder=None) -> AlgebraElement:
    """
    Parse ``source`` into a canonical element of its home algebra.

    With a triplet the home algebra is picked from the names used; names of
    both algebras in one expression raise a mixed-algebra error.
    """
    if isinstance(presentation, HopfTriplet):
        if degree is not None and zorder is not None:
            presentation = presentation.with_truncation(degree, zorder)
        home = _home_algebra(source, presentation)
    else:
        home = presentation
    tree = parse_expression_ast(source)
    value = ExpressionEvaluator(home).evaluate(tree)
    if not isinstance(value, AlgebraElement):
        raise PresentationError('Expected an algebra element, got a tensor')
    bound = home.context.degree if degree is None else degree
    return value.truncate(bound)


def _home_algebra(source: str, triplet: HopfTriplet) -> HopfPresentation:
    names = {node.ident for node in walk(parse_expression_ast(source)) if isinstance(node, Name)}
    owners = [a for a in (triplet.algebra, triplet.dual) if any(a.has_generator(n) for n in names)]
    if len(owners) > 1:
        raise MixedAlgebraError(
            f'Expression mixes generators of {triplet.algebra.name} and {triplet.dual.name}'
        )
    return owners[0] if owners else triplet.algebra
