"""
LALR grammar for `.hopf` sources (ply.yacc).

Coproduct right-hand sides share the expression grammar; ``(x)`` binds
tighter than ``+``/``-`` and looser than ``*``/``/``, so
``Pm (x) 1 + exp(-2*z*Pp) (x) Pm`` is a sum of two tensors.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from functools import lru_cache

import ply.yacc as yacc

from presentation.exceptions import PresentationSyntaxError
from presentation.services.ast import (
    AlgebraBlock,
    BinaryOp,
    Call,
    Name,
    Number,
    PairingBlock,
    Power,
    PresentationAST,
    Relation,
    Rule,
    UnaryMinus,
)
from presentation.services.lexer import column_of, tokens  # noqa: F401 (ply reads it)

precedence = (
    ('left', 'PLUS', 'MINUS'),
    ('left', 'TENSOR'),
    ('left', 'TIMES', 'DIVIDE'),
    ('right', 'UMINUS'),
    ('right', 'POWER'),
)


def _where(p, index):
    return p.lineno(index), column_of(p.lexer.lexdata, p.lexpos(index))


def p_file(p):
    'file : algebra algebra pairing'
    p[0] = PresentationAST(algebras=(p[1], p[2]), pairing=p[3])


def p_expression_input(p):
    'expression_input : expr'
    p[0] = p[1]


def p_algebra(p):
    '''algebra : ALGEBRA NAME LBRACE PARAMS COLON NAME SEMI GENERATORS COLON genlist SEMI RELATIONS COLON relations COPRODUCT COLON rules COUNIT COLON rules ANTIPODE COLON rules RBRACE'''
    line, column = _where(p, 1)
    names = tuple(name for name, _ in p[10])
    positions = tuple(position for _, position in p[10])
    p[0] = AlgebraBlock(
        name=p[2],
        parameter=p[6],
        generators=names,
        relations=tuple(p[14]),
        coproduct=tuple(p[17]),
        counit=tuple(p[20]),
        antipode=tuple(p[23]),
        generator_positions=positions,
        line=line,
        column=column,
    )


def p_genlist_single(p):
    'genlist : NAME'
    p[0] = [(p[1], _where(p, 1))]


def p_genlist_more(p):
    'genlist : genlist LT NAME'
    p[0] = p[1] + [(p[3], _where(p, 3))]


def p_relations_empty(p):
    'relations : '
    p[0] = []


def p_relations_more(p):
    'relations : relations relation'
    p[0] = p[1] + [p[2]]


def p_relation(p):
    'relation : LBRACKET NAME COMMA NAME RBRACKET EQUALS expr SEMI'
    line, column = _where(p, 1)
    p[0] = Relation(left=p[2], right=p[4], expression=p[7], line=line, column=column)


def p_rules_single(p):
    'rules : rule'
    p[0] = [p[1]]


def p_rules_more(p):
    'rules : rules rule'
    p[0] = p[1] + [p[2]]


def p_rule(p):
    'rule : NAME ARROW expr SEMI'
    line, column = _where(p, 1)
    p[0] = Rule(generator=p[1], expression=p[3], line=line, column=column)


def p_pairing(p):
    'pairing : PAIRING NAME NAME LBRACE pairlist RBRACE'
    line, column = _where(p, 1)
    p[0] = PairingBlock(left=p[2], right=p[3], pairs=tuple(p[5]), line=line, column=column)


def p_pairlist_single(p):
    'pairlist : NAME TILDE NAME'
    p[0] = [(p[1], p[3])]


def p_pairlist_more(p):
    'pairlist : pairlist COMMA NAME TILDE NAME'
    p[0] = p[1] + [(p[3], p[5])]


def p_expr_binop(p):
    '''expr : expr PLUS expr
            | expr MINUS expr
            | expr TIMES expr
            | expr DIVIDE expr
            | expr TENSOR expr'''
    line, column = _where(p, 2)
    p[0] = BinaryOp(op=p[2], left=p[1], right=p[3], line=line, column=column)


def p_expr_uminus(p):
    'expr : MINUS expr %prec UMINUS'
    line, column = _where(p, 1)
    p[0] = UnaryMinus(operand=p[2], line=line, column=column)


def p_expr_power(p):
    'expr : expr POWER INT'
    line, column = _where(p, 2)
    p[0] = Power(base=p[1], exponent=p[3], line=line, column=column)


def p_expr_group(p):
    'expr : LPAREN expr RPAREN'
    p[0] = p[2]


def p_expr_call(p):
    '''expr : EXP LPAREN expr RPAREN
            | LOG1P LPAREN expr RPAREN'''
    line, column = _where(p, 1)
    p[0] = Call(function=p[1], argument=p[3], line=line, column=column)


def p_expr_int(p):
    'expr : INT'
    line, column = _where(p, 1)
    p[0] = Number(value=Fraction(p[1]), line=line, column=column)


def p_expr_name(p):
    'expr : NAME'
    line, column = _where(p, 1)
    p[0] = Name(ident=p[1], line=line, column=column)


def p_error(t):
    if t is None:
        raise PresentationSyntaxError('Unexpected end of input')
    raise PresentationSyntaxError(
        f'Unexpected {t.value!r}',
        t.lineno,
        column_of(t.lexer.lexdata, t.lexpos),
    )


@lru_cache(maxsize=None)
def build_parser(start: str):
    """LALR parser for ``file`` or ``expression_input``."""
    return yacc.yacc(
        module=sys.modules[__name__],
        start=start,
        debug=False,
        write_tables=False,
        errorlog=yacc.NullLogger(),
    )
