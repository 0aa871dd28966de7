"""
Noncommutative PBW arithmetic.

Exports are resolved lazily so that importing a submodule does not pull in
Django settings before they are configured.
"""

__all__ = [
    'AlgebraElement',
    'PbwAlgebra',
    'TensorElement',
    'TruncationContext',
    'analytic_series',
    'multiply',
    'normal_order',
    'truncate',
]


def __getattr__(name):
    if name in ('AlgebraElement', 'TensorElement', 'multiply', 'truncate'):
        from freealg.services import elements
        return getattr(elements, name)
    if name in ('PbwAlgebra', 'normal_order'):
        from freealg.services import algebra
        return getattr(algebra, name)
    if name == 'TruncationContext':
        from freealg.services.context import TruncationContext
        return TruncationContext
    if name == 'analytic_series':
        from freealg.services.series import analytic_series
        return analytic_series
    raise AttributeError(f'module {__name__!r} has no attribute {name!r}')
