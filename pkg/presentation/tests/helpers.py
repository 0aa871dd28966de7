"""Shared access to the shipped presentations for tests."""
from presentation.services.loader import load_presentation, read_source


def nullplane(degree=3, zorder=2):
    return load_presentation('presets/nullplane.hopf', degree, zorder)


def kgalilei(degree=3, zorder=2):
    return load_presentation('presets/kgalilei.hopf', degree, zorder)


def preset_source(name):
    return read_source(f'presets/{name}.hopf')
