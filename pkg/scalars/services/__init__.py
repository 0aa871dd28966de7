from scalars.services.laurent import (
    LaurentScalar,
    add,
    invert,
    mul,
    parse_rational,
    substitute,
)

__all__ = ['LaurentScalar', 'add', 'invert', 'mul', 'parse_rational', 'substitute']
