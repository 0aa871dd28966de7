"""Module actions, operator matrices and their property checks."""

__all__ = [
    'ActionKind',
    'OperatorMatrix',
    'act',
    'adjoint_matrix',
    'basis_operator',
    'matrix_exp',
    'matrix_geom',
    'matrix_log1p',
    'operator_matrix',
    'run_module_properties',
]

_HOMES = {
    'ActionKind': 'actions',
    'act': 'actions',
    'OperatorMatrix': 'matrices',
    'adjoint_matrix': 'matrices',
    'basis_operator': 'matrices',
    'matrix_exp': 'matrices',
    'matrix_geom': 'matrices',
    'matrix_log1p': 'matrices',
    'operator_matrix': 'matrices',
    'run_module_properties': 'properties',
}


def __getattr__(name):
    if name not in _HOMES:
        raise AttributeError(f'module {__name__!r} has no attribute {name!r}')
    from importlib import import_module

    return getattr(import_module(f'modact.services.{_HOMES[name]}'), name)
