"""
Tokenizer for `.hopf` sources (ply.lex).

``(x)`` is the tensor-product symbol unless it directly follows an
identifier (``exp(x)``) or an operator / opening bracket (``2*(x)``), in
which case it is a parenthesised generator named ``x``.
"""
from __future__ import annotations

import ply.lex as lex

from presentation.exceptions import PresentationSyntaxError

reserved = {
    'algebra': 'ALGEBRA',
    'params': 'PARAMS',
    'generators': 'GENERATORS',
    'relations': 'RELATIONS',
    'coproduct': 'COPRODUCT',
    'counit': 'COUNIT',
    'antipode': 'ANTIPODE',
    'pairing': 'PAIRING',
    'exp': 'EXP',
    'log1p': 'LOG1P',
}

tokens = (
    'NAME', 'INT', 'TENSOR', 'ARROW',
    'LPAREN', 'RPAREN', 'LBRACE', 'RBRACE', 'LBRACKET', 'RBRACKET',
    'COMMA', 'SEMI', 'COLON', 'LT', 'TILDE', 'EQUALS',
    'PLUS', 'MINUS', 'TIMES', 'DIVIDE', 'POWER',
) + tuple(reserved.values())

# Characters after which "(x)" opens a parenthesised expression
_OPENERS = set('(*+-/^,=>:~[{;<')


def column_of(data: str, lexpos: int) -> int:
    return lexpos - data.rfind('\n', 0, lexpos)


def _tensor_context(data: str, pos: int) -> bool:
    start = pos
    while start > 0 and (data[start - 1].isalnum() or data[start - 1] == '_'):
        start -= 1
    if start < pos:
        # Adjacent word: a name means a call, a number means a tensor
        return data[start].isdigit()
    before = data[:pos].rstrip()
    if not before:
        return False
    return before[-1] not in _OPENERS


class HopfLexer:
    tokens = tokens

    t_ignore = ' \t\r'
    t_ignore_COMMENT = r'//[^\n]*'

    t_ARROW = r'->'
    t_LPAREN = r'\('
    t_RPAREN = r'\)'
    t_LBRACE = r'\{'
    t_RBRACE = r'\}'
    t_LBRACKET = r'\['
    t_RBRACKET = r'\]'
    t_COMMA = r','
    t_SEMI = r';'
    t_COLON = r':'
    t_LT = r'<'
    t_TILDE = r'~'
    t_EQUALS = r'='
    t_PLUS = r'\+'
    t_MINUS = r'-'
    t_TIMES = r'\*'
    t_DIVIDE = r'/'
    t_POWER = r'\^'

    def __init__(self):
        self.lexer = lex.lex(module=self, errorlog=lex.NullLogger())

    def t_TENSOR(self, t):
        r'\(x\)'
        if not _tensor_context(t.lexer.lexdata, t.lexpos):
            t.type = 'LPAREN'
            t.value = '('
            t.lexer.lexpos = t.lexpos + 1
        return t

    def t_NAME(self, t):
        r'[A-Za-z_][A-Za-z0-9_]*'
        t.type = reserved.get(t.value, 'NAME')
        return t

    def t_INT(self, t):
        r'\d+'
        t.value = int(t.value)
        return t

    def t_newline(self, t):
        r'\n+'
        t.lexer.lineno += len(t.value)

    def t_error(self, t):
        raise PresentationSyntaxError(
            f'Unexpected character {t.value[0]!r}',
            t.lineno,
            column_of(t.lexer.lexdata, t.lexpos),
        )

    def tokenize(self, data: str) -> list:
        self.lexer.lineno = 1
        self.lexer.input(data)
        return list(iter(self.lexer.token, None))
