"""Hopf structure maps, pairing and axiom verification."""

__all__ = [
    'AxiomReport',
    'antipode',
    'coproduct',
    'counit',
    'pair',
    'pair_tensor',
    'run_structure_properties',
    'verify_axioms',
]

_HOMES = {
    'antipode': 'structure',
    'coproduct': 'structure',
    'counit': 'structure',
    'pair': 'structure',
    'pair_tensor': 'structure',
    'AxiomReport': 'axioms',
    'verify_axioms': 'axioms',
    'run_structure_properties': 'properties',
}


def __getattr__(name):
    if name not in _HOMES:
        raise AttributeError(f'module {__name__!r} has no attribute {name!r}')
    from importlib import import_module

    return getattr(import_module(f'hopf.services.{_HOMES[name]}'), name)
