"""
Parse tree of `.hopf` sources.

Source positions are carried for diagnostics but excluded from equality, so
``parse(render(parse(text))) == parse(text)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple, Union


@dataclass(frozen=True)
class Number:
    value: Fraction
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Name:
    ident: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class UnaryMinus:
    operand: 'Expr'
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinaryOp:
    """``op`` is one of ``+ - * /`` or ``(x)`` (tensor product)."""

    op: str
    left: 'Expr'
    right: 'Expr'
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Power:
    base: 'Expr'
    exponent: int
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    function: str
    argument: 'Expr'
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


Expr = Union[Number, Name, UnaryMinus, BinaryOp, Power, Call]


@dataclass(frozen=True)
class Relation:
    left: str
    right: str
    expression: Expr
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Rule:
    generator: str
    expression: Expr
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class AlgebraBlock:
    name: str
    parameter: str
    generators: Tuple[str, ...]
    relations: Tuple[Relation, ...]
    coproduct: Tuple[Rule, ...]
    counit: Tuple[Rule, ...]
    antipode: Tuple[Rule, ...]
    generator_positions: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PairingBlock:
    left: str
    right: str
    pairs: Tuple[Tuple[str, str], ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PresentationAST:
    algebras: Tuple[AlgebraBlock, AlgebraBlock]
    pairing: PairingBlock

    def algebra(self, name: str) -> AlgebraBlock:
        for block in self.algebras:
            if block.name == name:
                return block
        raise KeyError(name)


def walk(expression: Expr):
    """Yield every node of an expression tree, depth first."""
    yield expression
    if isinstance(expression, UnaryMinus):
        yield from walk(expression.operand)
    elif isinstance(expression, BinaryOp):
        yield from walk(expression.left)
        yield from walk(expression.right)
    elif isinstance(expression, Power):
        yield from walk(expression.base)
    elif isinstance(expression, Call):
        yield from walk(expression.argument)
