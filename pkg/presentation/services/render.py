"""
Rendering of presentations back to `.hopf` text.

The printer emits the minimum parentheses implied by the grammar's
precedence table, so parsing the output yields an equal tree.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Union

from freealg.services.elements import AlgebraElement, TensorElement
from freealg.services.monomials import Monomial, basis_key
from presentation.services.ast import (
    AlgebraBlock,
    BinaryOp,
    Call,
    Expr,
    Name,
    Number,
    PairingBlock,
    Power,
    PresentationAST,
    Relation,
    Rule,
    UnaryMinus,
)
from presentation.services.structures import HopfPresentation, HopfTriplet
from scalars.services.laurent import LaurentScalar

_BINARY_PRECEDENCE = {'+': 1, '-': 1, '(x)': 2, '*': 3, '/': 3}
_SPACED = {'+': ' + ', '-': ' - ', '(x)': ' (x) ', '*': '*', '/': '/'}


def _precedence(node: Expr) -> int:
    if isinstance(node, BinaryOp):
        return _BINARY_PRECEDENCE[node.op]
    if isinstance(node, UnaryMinus):
        return 4
    if isinstance(node, Power):
        return 5
    return 6


def _wrap(node: Expr, parenthesize: bool) -> str:
    text = render_expression(node)
    return f'({text})' if parenthesize else text


def render_expression(node: Expr) -> str:
    if isinstance(node, Number):
        value = Fraction(node.value)
        if value.denominator == 1:
            return str(value.numerator)
        return f'({value.numerator}/{value.denominator})'
    if isinstance(node, Name):
        return node.ident
    if isinstance(node, UnaryMinus):
        return '-' + _wrap(node.operand, _precedence(node.operand) < 4)
    if isinstance(node, Power):
        return f'{_wrap(node.base, _precedence(node.base) <= 5)}^{node.exponent}'
    if isinstance(node, Call):
        return f'{node.function}({render_expression(node.argument)})'
    precedence = _BINARY_PRECEDENCE[node.op]
    left = _wrap(node.left, _precedence(node.left) < precedence)
    right = _wrap(node.right, _precedence(node.right) <= precedence)
    return f'{left}{_SPACED[node.op]}{right}'


# Elements as expression trees

def _product(factors: List[Expr]) -> Expr:
    result = factors[0]
    for factor in factors[1:]:
        result = BinaryOp('*', result, factor)
    return result


def _monomial_factors(monomial: Monomial, names) -> List[Expr]:
    factors: List[Expr] = []
    for name, exponent in zip(names, monomial):
        if exponent == 1:
            factors.append(Name(name))
        elif exponent > 1:
            factors.append(Power(Name(name), exponent))
    return factors


def _term(magnitude: Fraction, exponent: int, parameter: str, factors: List[Expr]) -> Expr:
    """``magnitude * parameter^exponent * factors`` with a positive magnitude."""
    numerator: List[Expr] = []
    if magnitude.numerator != 1 or (not factors and exponent <= 0):
        numerator.append(Number(Fraction(magnitude.numerator)))
    if exponent == 1:
        numerator.append(Name(parameter))
    elif exponent > 1:
        numerator.append(Power(Name(parameter), exponent))
    numerator.extend(factors)
    node = _product(numerator)
    divisors: List[Expr] = []
    if magnitude.denominator != 1:
        divisors.append(Number(Fraction(magnitude.denominator)))
    if exponent == -1:
        divisors.append(Name(parameter))
    elif exponent < -1:
        divisors.append(Power(Name(parameter), -exponent))
    if divisors:
        node = BinaryOp('/', node, _product(divisors))
    return node


def _negate_leading(node: Expr) -> Expr:
    """Minus on the leftmost factor, the tree ``-2*Pm`` parses to."""
    if isinstance(node, BinaryOp) and node.op in ('*', '/', '(x)'):
        return BinaryOp(node.op, _negate_leading(node.left), node.right)
    return UnaryMinus(node)


def _signed_sum(pieces: List[tuple[bool, Expr]]) -> Expr:
    if not pieces:
        return Number(Fraction(0))
    negative, node = pieces[0]
    result = _negate_leading(node) if negative else node
    for negative, node in pieces[1:]:
        result = BinaryOp('-' if negative else '+', result, node)
    return result


def _scalar_pieces(coefficient: LaurentScalar, parameter: str, factors: List[Expr]):
    for exponent, value in coefficient.terms:
        yield value < 0, _term(abs(value), exponent, parameter, factors)


def element_to_ast(element: AlgebraElement, max_degree: Optional[int] = None) -> Expr:
    """Expression tree of an element, terms in basis order."""
    algebra = element.algebra
    if max_degree is not None:
        element = element.truncate(max_degree)
    pieces = []
    for monomial in sorted(element.terms, key=basis_key):
        factors = _monomial_factors(monomial, algebra.generators)
        pieces.extend(_scalar_pieces(element.terms[monomial], algebra.parameter, factors))
    return _signed_sum(pieces)


def tensor_to_ast(tensor: TensorElement, max_degree: Optional[int] = None) -> Expr:
    """Expression tree ``c*m1 (x) m2 + ...``; coefficients ride on the left leg."""
    algebra = tensor.algebra
    names = algebra.generators
    pieces = []
    keys = sorted(tensor.terms, key=lambda key: (basis_key(key[0]), basis_key(key[1])))
    for m1, m2 in keys:
        if max_degree is not None and sum(m1) + sum(m2) > max_degree:
            continue
        right = _monomial_factors(m2, names)
        right_node = _product(right) if right else Number(Fraction(1))
        for negative, left in _scalar_pieces(tensor.terms[(m1, m2)], algebra.parameter, _monomial_factors(m1, names)):
            pieces.append((negative, BinaryOp('(x)', left, right_node)))
    if not pieces:
        return BinaryOp('(x)', Number(Fraction(0)), Number(Fraction(1)))
    return _signed_sum(pieces)


def _rational_ast(value: Fraction) -> Expr:
    value = Fraction(value)
    magnitude = abs(value)
    node: Expr = Number(Fraction(magnitude.numerator))
    if magnitude.denominator != 1:
        node = BinaryOp('/', node, Number(Fraction(magnitude.denominator)))
    return _negate_leading(node) if value < 0 else node


# Whole presentations

def algebra_to_block(algebra: HopfPresentation, degree: Optional[int] = None) -> AlgebraBlock:
    """AST block of elaborated data, relations kept in their source orientation."""
    bound = algebra.context.degree if degree is None else degree
    pairs = algebra.relation_pairs or tuple(
        (algebra.generators[j], algebra.generators[i]) for j, i in algebra.commutator_pairs()
    )
    relations = tuple(
        Relation(left, right, element_to_ast(algebra.commutator(left, right), bound))
        for left, right in pairs
    )
    coproduct = tuple(
        Rule(name, tensor_to_ast(algebra.coproduct_of(name), bound)) for name in algebra.generators
    )
    counit = tuple(Rule(name, _rational_ast(algebra.counit_of(name))) for name in algebra.generators)
    antipode = tuple(
        Rule(name, element_to_ast(algebra.antipode_of(name), bound)) for name in algebra.generators
    )
    return AlgebraBlock(
        name=algebra.name,
        parameter=algebra.parameter,
        generators=algebra.generators,
        relations=relations,
        coproduct=coproduct,
        counit=counit,
        antipode=antipode,
    )


def triplet_to_ast(triplet: HopfTriplet, degree: Optional[int] = None) -> PresentationAST:
    algebra, dual, pairing = triplet
    return PresentationAST(
        algebras=(algebra_to_block(algebra, degree), algebra_to_block(dual, degree)),
        pairing=PairingBlock(pairing.left, pairing.right, pairing.pairs),
    )


def _render_block(block: AlgebraBlock) -> List[str]:
    lines = [
        f'algebra {block.name} {{',
        f'  params: {block.parameter};',
        f'  generators: {" < ".join(block.generators)};',
        '  relations:',
    ]
    for relation in block.relations:
        lines.append(f'    [{relation.left}, {relation.right}] = {render_expression(relation.expression)};')
    for section in ('coproduct', 'counit', 'antipode'):
        lines.append(f'  {section}:')
        for rule in getattr(block, section):
            lines.append(f'    {rule.generator} -> {render_expression(rule.expression)};')
    lines.append('}')
    return lines


def render_presentation(source: Union[PresentationAST, HopfTriplet], degree: Optional[int] = None) -> str:
    """`.hopf` text of a parsed or an elaborated presentation."""
    ast = triplet_to_ast(source, degree) if isinstance(source, HopfTriplet) else source
    lines: List[str] = []
    for block in ast.algebras:
        lines.extend(_render_block(block))
        lines.append('')
    pairs = ', '.join(f'{a} ~ {b}' for a, b in ast.pairing.pairs)
    lines.append(f'pairing {ast.pairing.left} {ast.pairing.right} {{ {pairs} }}')
    return '\n'.join(lines) + '\n'
