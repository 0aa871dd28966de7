"""
Algebra and tensor-square elements over a PBW algebra.

Elements keep their terms at the algebra's working precision; ``truncate``
produces the public, degree-bounded view.
"""
from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Dict, Iterable, Mapping, Optional, Tuple, Union

from freealg.exceptions import AlgebraError, MixedAlgebraError
from freealg.services.monomials import Monomial, degree, empty, render_monomial
from scalars.services.laurent import LaurentScalar

if TYPE_CHECKING:
    from freealg.services.algebra import PbwAlgebra

ScalarLike = Union[LaurentScalar, int, Fraction]
TensorKey = Tuple[Monomial, Monomial]


def _clean(terms: Mapping) -> dict:
    return {key: value for key, value in terms.items() if value}


def _render_coefficient(coefficient: LaurentScalar, body: str, parameter: str, first: bool) -> str:
    """Render one ``coefficient*body`` term with its joining sign."""
    text = coefficient.render(parameter)
    negative = False
    if coefficient.is_single_term():
        if text.startswith('-'):
            negative = True
            text = text[1:]
        if body == '1':
            piece = text
        elif text == '1':
            piece = body
        else:
            piece = f'{text}*{body}'
    else:
        piece = f'({text})' if body == '1' else f'({text})*{body}'
    if first:
        return f'-{piece}' if negative else piece
    return f' - {piece}' if negative else f' + {piece}'


class AlgebraElement:
    """Finite sum of PBW monomials with Laurent coefficients, in one home algebra."""

    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra: 'PbwAlgebra', terms: Optional[Mapping[Monomial, LaurentScalar]] = None):
        self.algebra = algebra
        self.terms: Dict[Monomial, LaurentScalar] = _clean(terms or {})

    # Inspection

    @property
    def degree(self) -> int:
        """Largest generator degree present; -1 for zero."""
        return max((degree(m) for m in self.terms), default=-1)

    @property
    def low_degree(self) -> int:
        return min((degree(m) for m in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> LaurentScalar:
        return self.terms.get(monomial, self.algebra.scalar(0))

    def constant_term(self) -> LaurentScalar:
        return self.coefficient(empty(self.algebra.size))

    def is_scalar(self) -> bool:
        return all(not any(m) for m in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # Arithmetic

    def _check(self, other: 'AlgebraElement') -> None:
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise MixedAlgebraError(
                f'Cannot combine elements of {self.algebra.name} and '
                f'{getattr(getattr(other, "algebra", None), "name", type(other).__name__)}'
            )

    def _coerce(self, other) -> 'AlgebraElement':
        if isinstance(other, (int, Fraction, LaurentScalar)):
            return self.algebra.constant(other)
        self._check(other)
        return other

    def __add__(self, other) -> 'AlgebraElement':
        other = self._coerce(other)
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            total = terms[monomial] + coefficient if monomial in terms else coefficient
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return AlgebraElement(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> 'AlgebraElement':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'AlgebraElement':
        return self._coerce(other) + (-self)

    def scale(self, value: ScalarLike) -> 'AlgebraElement':
        value = self.algebra.scalar(value)
        return AlgebraElement(self.algebra, {m: c * value for m, c in self.terms.items()})

    def __mul__(self, other) -> 'AlgebraElement':
        if isinstance(other, (int, Fraction, LaurentScalar)):
            return self.scale(other)
        self._check(other)
        return AlgebraElement(self.algebra, self.algebra.multiply_terms(self.terms, other.terms))

    def __rmul__(self, other) -> 'AlgebraElement':
        if isinstance(other, (int, Fraction, LaurentScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> 'AlgebraElement':
        if exponent < 0:
            raise AlgebraError('Negative powers of algebra elements are not supported')
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    def truncate(self, max_degree: int) -> 'AlgebraElement':
        return AlgebraElement(
            self.algebra, {m: c for m, c in self.terms.items() if degree(m) <= max_degree}
        )

    def map_coefficients(self, function) -> 'AlgebraElement':
        return AlgebraElement(self.algebra, {m: function(c) for m, c in self.terms.items()})

    # Comparison and rendering

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentScalar)):
            other = self.algebra.constant(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.algebra is self.algebra and other.terms == self.terms

    __hash__ = None

    def render(self) -> str:
        """Canonical text: terms sorted by exponent multi-index, e.g. ``(2 - 2*z)*Pm^1 + K^1*Pp^1``."""
        if not self.terms:
            return '0'
        names = self.algebra.generators
        pieces = []
        for index, monomial in enumerate(sorted(self.terms)):
            pieces.append(
                _render_coefficient(
                    self.terms[monomial],
                    render_monomial(monomial, names),
                    self.algebra.parameter,
                    first=index == 0,
                )
            )
        return ''.join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f'AlgebraElement({self.algebra.name}: {self.render()})'


class TensorElement:
    """Element of A ⊗ A; legs multiply independently."""

    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra: 'PbwAlgebra', terms: Optional[Mapping[TensorKey, LaurentScalar]] = None):
        self.algebra = algebra
        self.terms: Dict[TensorKey, LaurentScalar] = _clean(terms or {})

    @classmethod
    def from_pair(cls, left: AlgebraElement, right: AlgebraElement) -> 'TensorElement':
        if left.algebra is not right.algebra:
            raise MixedAlgebraError('Both tensor legs must live in the same algebra')
        return cls(
            left.algebra,
            {
                (m1, m2): c1 * c2
                for m1, c1 in left.terms.items()
                for m2, c2 in right.terms.items()
            },
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other) -> None:
        if not isinstance(other, TensorElement) or other.algebra is not self.algebra:
            raise MixedAlgebraError('Cannot combine tensors of different algebras')

    def __add__(self, other) -> 'TensorElement':
        self._check(other)
        terms = dict(self.terms)
        for key, coefficient in other.terms.items():
            total = terms[key] + coefficient if key in terms else coefficient
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return TensorElement(self.algebra, terms)

    def __neg__(self) -> 'TensorElement':
        return TensorElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> 'TensorElement':
        return self + (-other)

    def scale(self, value: ScalarLike) -> 'TensorElement':
        value = self.algebra.scalar(value)
        return TensorElement(self.algebra, {k: c * value for k, c in self.terms.items()})

    def __mul__(self, other) -> 'TensorElement':
        if isinstance(other, (int, Fraction, LaurentScalar)):
            return self.scale(other)
        self._check(other)
        return TensorElement(self.algebra, self.algebra.multiply_tensor_terms(self.terms, other.terms))

    def __rmul__(self, other) -> 'TensorElement':
        if isinstance(other, (int, Fraction, LaurentScalar)):
            return self.scale(other)
        return NotImplemented

    def truncate(self, left: int, right: Optional[int] = None, total: Optional[int] = None) -> 'TensorElement':
        right = left if right is None else right
        return TensorElement(
            self.algebra,
            {
                (m1, m2): c
                for (m1, m2), c in self.terms.items()
                if degree(m1) <= left
                and degree(m2) <= right
                and (total is None or degree(m1) + degree(m2) <= total)
            },
        )

    def legs(self) -> Iterable[tuple[AlgebraElement, AlgebraElement, LaurentScalar]]:
        for (m1, m2), coefficient in self.terms.items():
            yield self.algebra.monomial(m1), self.algebra.monomial(m2), coefficient

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return other.algebra is self.algebra and other.terms == self.terms

    __hash__ = None

    def render(self) -> str:
        if not self.terms:
            return '0'
        names = self.algebra.generators
        pieces = []
        for index, (m1, m2) in enumerate(sorted(self.terms)):
            body = f'{render_monomial(m1, names)} (x) {render_monomial(m2, names)}'
            coefficient = self.terms[(m1, m2)]
            text = coefficient.render(self.algebra.parameter)
            negative = coefficient.is_single_term() and text.startswith('-')
            if negative:
                text = text[1:]
            if not coefficient.is_single_term():
                text = f'({text})'
            piece = body if text == '1' else f'{text}*{body}'
            if index == 0:
                pieces.append(f'-{piece}' if negative else piece)
            else:
                pieces.append(f' - {piece}' if negative else f' + {piece}')
        return ''.join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f'TensorElement({self.algebra.name}: {self.render()})'


def multiply(e1, e2, max_degree: Optional[int] = None):
    """Product of two elements (or two tensors), truncated at the run degree."""
    if type(e1) is not type(e2):
        raise MixedAlgebraError('Cannot multiply an algebra element with a tensor')
    bound = e1.algebra.context.degree if max_degree is None else max_degree
    return (e1 * e2).truncate(bound)


def truncate(element: AlgebraElement, max_degree: int) -> AlgebraElement:
    return element.truncate(max_degree)
