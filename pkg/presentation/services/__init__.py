"""
`.hopf` parsing, elaboration and rendering.

Exports are resolved lazily, like ``freealg.services``.
"""

__all__ = [
    'HopfPresentation',
    'HopfTriplet',
    'PairingDecl',
    'elaborate',
    'load_presentation',
    'parse_expression',
    'parse_presentation',
    'render_presentation',
]

_HOMES = {
    'HopfPresentation': 'structures',
    'HopfTriplet': 'structures',
    'PairingDecl': 'structures',
    'elaborate': 'elaborate',
    'parse_expression': 'elaborate',
    'load_presentation': 'loader',
    'parse_presentation': 'parser',
    'render_presentation': 'render',
}


def __getattr__(name):
    if name not in _HOMES:
        raise AttributeError(f'module {__name__!r} has no attribute {name!r}')
    from importlib import import_module

    return getattr(import_module(f'presentation.services.{_HOMES[name]}'), name)
