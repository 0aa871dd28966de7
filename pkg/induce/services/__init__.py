"""Characters, carrier solving, induced representations and classical limits."""

__all__ = [
    'Character',
    'InducedRep',
    'classical_limit',
    'classical_limit_rep',
    'gauge_shift',
    'induce',
    'induced_action',
    'make_character',
    'parse_character',
    'rescale_check',
    'solve_equivariance',
]

_HOMES = {
    'Character': 'characters',
    'make_character': 'characters',
    'parse_character': 'characters',
    'InducedRep': 'induction',
    'gauge_shift': 'induction',
    'induce': 'induction',
    'induced_action': 'induction',
    'rescale_check': 'induction',
    'solve_equivariance': 'induction',
    'classical_limit': 'limits',
    'classical_limit_rep': 'limits',
}


def __getattr__(name):
    if name not in _HOMES:
        raise AttributeError(f'module {__name__!r} has no attribute {name!r}')
    from importlib import import_module

    return getattr(import_module(f'induce.services.{_HOMES[name]}'), name)
