"""
Parsing and static validation of `.hopf` sources.
"""
from __future__ import annotations

import logging

from presentation.exceptions import PresentationError
from presentation.services.ast import (
    AlgebraBlock,
    Expr,
    Name,
    PresentationAST,
    walk,
)
from presentation.services.grammar import build_parser
from presentation.services.lexer import HopfLexer

logger = logging.getLogger(__name__)


def _parse(source: str, start: str):
    lexer = HopfLexer().lexer
    lexer.lineno = 1
    return build_parser(start).parse(source, lexer=lexer)


def _check_names(expression: Expr, allowed: set, block: str) -> None:
    for node in walk(expression):
        if isinstance(node, Name) and node.ident not in allowed:
            raise PresentationError(
                f'Undeclared name {node.ident!r} in algebra {block}', node.line, node.column
            )


def _validate_rules(block: AlgebraBlock, section: str, allowed: set) -> None:
    rules = getattr(block, section)
    seen = set()
    for rule in rules:
        if rule.generator not in block.generators:
            raise PresentationError(
                f'{section} rule for unknown generator {rule.generator!r} in {block.name}',
                rule.line,
                rule.column,
            )
        if rule.generator in seen:
            raise PresentationError(
                f'Duplicate {section} rule for {rule.generator!r} in {block.name}',
                rule.line,
                rule.column,
            )
        seen.add(rule.generator)
        _check_names(rule.expression, allowed, block.name)
    missing = [g for g in block.generators if g not in seen]
    if missing:
        raise PresentationError(
            f'Missing {section} rule for {", ".join(missing)} in {block.name}',
            block.line,
            block.column,
        )


def validate_block(block: AlgebraBlock) -> None:
    """Static checks of one algebra block; raises PresentationError."""
    seen = set()
    for name, (line, column) in zip(block.generators, block.generator_positions):
        if name in seen:
            raise PresentationError(f'Duplicate generator {name!r} in {block.name}', line, column)
        seen.add(name)
    if block.parameter in seen:
        raise PresentationError(
            f'Parameter {block.parameter!r} clashes with a generator of {block.name}',
            block.line,
            block.column,
        )
    allowed = seen | {block.parameter}
    pairs = set()
    for relation in block.relations:
        for name in (relation.left, relation.right):
            if name not in seen:
                raise PresentationError(
                    f'Relation names unknown generator {name!r} in {block.name}',
                    relation.line,
                    relation.column,
                )
        if relation.left == relation.right:
            raise PresentationError(
                f'Relation [{relation.left}, {relation.right}] is trivially zero',
                relation.line,
                relation.column,
            )
        key = frozenset((relation.left, relation.right))
        if key in pairs:
            raise PresentationError(
                f'Relation for {relation.left}, {relation.right} given twice in {block.name}',
                relation.line,
                relation.column,
            )
        pairs.add(key)
        _check_names(relation.expression, allowed, block.name)
    for section in ('coproduct', 'counit', 'antipode'):
        _validate_rules(block, section, allowed)


def validate_presentation(ast: PresentationAST) -> None:
    first, second = ast.algebras
    validate_block(first)
    validate_block(second)
    if first.name == second.name:
        raise PresentationError(f'Both algebras are named {first.name!r}', second.line, second.column)
    pairing = ast.pairing
    if {pairing.left, pairing.right} != {first.name, second.name}:
        raise PresentationError(
            f'Pairing must relate {first.name} and {second.name}, got {pairing.left} and {pairing.right}',
            pairing.line,
            pairing.column,
        )
    left = ast.algebra(pairing.left)
    right = ast.algebra(pairing.right)
    if len(left.generators) != len(right.generators):
        raise PresentationError(
            f'{left.name} and {right.name} have different numbers of generators',
            pairing.line,
            pairing.column,
        )
    expected = list(zip(left.generators, right.generators))
    if list(pairing.pairs) != expected:
        # The dual basis <h_l, phi^m> = l! delta is defined on positions
        raise PresentationError(
            'Pairing must associate generators position by position: '
            + ', '.join(f'{a} ~ {b}' for a, b in expected),
            pairing.line,
            pairing.column,
        )


def parse_presentation(source: str) -> PresentationAST:
    """
    Parse and statically validate a `.hopf` source.

    Raises:
        PresentationSyntaxError: lexical or grammatical error.
        PresentationError: duplicate generator, undeclared name, or an
            inconsistent pairing block.
    """
    ast = _parse(source, 'file')
    validate_presentation(ast)
    logger.debug(f'Parsed presentation with algebras {[b.name for b in ast.algebras]}')
    return ast


def parse_expression_ast(source: str) -> Expr:
    """Parse a standalone expression (no name resolution)."""
    return _parse(source, 'expression_input')
