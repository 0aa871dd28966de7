"""
Truncated Laurent series in one formal parameter with exact rational coefficients.

A ``LaurentScalar`` of order Z stores exponents in the window ``[-Z, Z]``.
Exponents above Z are truncation noise and are dropped; exponents below -Z
are a construction error (there is no cancellation rescue).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from scalars.exceptions import (
    PoleError,
    ScalarError,
    TruncationMismatchError,
    ZeroDivisionScalarError,
)

RationalLike = Union[int, Fraction]
TermSource = Union[Mapping[int, RationalLike], Iterable[Tuple[int, RationalLike]], None]


class LaurentScalar:
    """Immutable truncated Laurent series ``sum c_e * z^e`` with ``-Z <= e <= Z``."""

    __slots__ = ('_terms', 'order', '_hash')

    def __init__(self, terms: TermSource = None, order: int = 0):
        if order < 0:
            raise ScalarError(f'Truncation order must be non-negative, got {order}')
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        clean: dict[int, Fraction] = {}
        for exponent, coefficient in items:
            value = Fraction(coefficient)
            if not value:
                continue
            exponent = int(exponent)
            if exponent > order:
                continue
            if exponent < -order:
                raise PoleError(
                    f'Exponent {exponent} lies below the Laurent window of order {order}'
                )
            clean[exponent] = clean.get(exponent, 0) + value
        self._terms = {e: c for e, c in clean.items() if c}
        self.order = order
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, order: int) -> 'LaurentScalar':
        # Trusted constructor: terms already clean and inside the window.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.order = order
        obj._hash = None
        return obj

    # Constructors

    @classmethod
    def zero(cls, order: int) -> 'LaurentScalar':
        return cls._raw({}, order)

    @classmethod
    def one(cls, order: int) -> 'LaurentScalar':
        return cls._raw({0: Fraction(1)}, order)

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> 'LaurentScalar':
        return cls({0: value}, order)

    @classmethod
    def monomial(cls, coefficient: RationalLike, exponent: int, order: int) -> 'LaurentScalar':
        """``coefficient * z^exponent``; zero when the exponent is above the order."""
        return cls({exponent: coefficient}, order)

    # Inspection

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ScalarError('The zero scalar has no valuation')
        return min(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Arithmetic

    def _coerce(self, other) -> 'LaurentScalar':
        if isinstance(other, LaurentScalar):
            if other.order != self.order:
                raise TruncationMismatchError(
                    f'Cannot combine scalars of order {self.order} and {other.order}'
                )
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentScalar.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = terms.get(exponent, 0) + coefficient
            if value:
                terms[exponent] = value
            else:
                terms.pop(exponent, None)
        return LaurentScalar._raw(terms, self.order)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentScalar':
        return LaurentScalar._raw({e: -c for e, c in self._terms.items()}, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentScalar._raw({}, self.order)
            return LaurentScalar._raw({e: c * other for e, c in self._terms.items()}, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = self.order
        terms: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = e1 + e2
                if exponent > order:
                    continue
                if exponent < -order:
                    raise PoleError(
                        f'Product term z^{exponent} lies below the Laurent window of order {order}'
                    )
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return LaurentScalar._raw({e: c for e, c in terms.items() if c}, order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionScalarError('Division by zero')
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.invert()

    def __pow__(self, exponent: int) -> 'LaurentScalar':
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = LaurentScalar.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, exponent: int) -> 'LaurentScalar':
        """Multiply by ``z^exponent``."""
        return LaurentScalar({e + exponent: c for e, c in self._terms.items()}, self.order)

    def invert(self) -> 'LaurentScalar':
        """Inverse up to truncation: ``a * a.invert() == 1`` modulo z^(Z+1)."""
        if not self._terms:
            raise ZeroDivisionScalarError('Cannot invert the zero scalar')
        order = self.order
        valuation = self.valuation
        lead = self._terms[valuation]
        # a = lead * z^v * (1 + u) with u of positive valuation
        unit_part = {e - valuation: c / lead for e, c in self._terms.items() if e != valuation}
        precision = order + valuation
        inverse = {0: Fraction(1)}
        power = {0: Fraction(1)}
        for _ in range(precision):
            nxt: dict[int, Fraction] = {}
            for e1, c1 in power.items():
                for e2, c2 in unit_part.items():
                    exponent = e1 + e2
                    if exponent <= precision:
                        nxt[exponent] = nxt.get(exponent, 0) - c1 * c2
            power = {e: c for e, c in nxt.items() if c}
            if not power:
                break
            for exponent, coefficient in power.items():
                inverse[exponent] = inverse.get(exponent, 0) + coefficient
        return LaurentScalar(
            {e - valuation: c / lead for e, c in inverse.items() if c}, order
        )

    def substitute(self, value: RationalLike) -> Fraction:
        """Evaluate at a rational parameter value."""
        value = Fraction(value)
        if not value:
            if self._terms and self.valuation < 0:
                raise PoleError('Cannot evaluate a scalar with a pole at parameter value 0')
            return self.coefficient(0)
        return sum((c * value ** e for e, c in self._terms.items()), Fraction(0))

    def retruncate(self, order: int) -> 'LaurentScalar':
        """Re-express at another truncation order (dropping or checking exponents)."""
        if order == self.order:
            return self
        return LaurentScalar(self._terms, order)

    # Comparison and rendering

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentScalar):
            return self.order == other.order and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {0: Fraction(other)}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the int or Fraction they compare equal to
            if self.is_constant():
                self._hash = hash(self.coefficient(0))
            else:
                self._hash = hash((self.order, frozenset(self._terms.items())))
        return self._hash

    def render(self, parameter: str = 'z') -> str:
        """Canonical text: increasing exponent, e.g. ``z^-1 + 2`` or ``-4/3*z^2``."""
        if not self._terms:
            return '0'
        pieces = []
        for index, (exponent, coefficient) in enumerate(self.terms):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = parameter if exponent == 1 else f'{parameter}^{exponent}'
                body = power if magnitude == 1 else f'{magnitude}*{power}'
            if index == 0:
                pieces.append(f'-{body}' if coefficient < 0 else body)
            else:
                pieces.append(f' - {body}' if coefficient < 0 else f' + {body}')
        return ''.join(pieces)

    def is_single_term(self) -> bool:
        return len(self._terms) <= 1

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f'LaurentScalar({self.render()!r}, order={self.order})'


def add(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    return a + b


def mul(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    return a * b


def invert(a: LaurentScalar) -> LaurentScalar:
    return a.invert()


def substitute(a: LaurentScalar, value: RationalLike) -> Fraction:
    return a.substitute(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``3``, ``-1/3`` or ``0.5`` into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ScalarError(f'Invalid rational {text!r}') from exc
