"""
Locating and loading `.hopf` files.

``presets/<name>.hopf`` resolves against ``HOPFKIT_PRESETS_DIR`` so the
shipped presentations can be named without an absolute path.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path

from django.conf import settings

from presentation.exceptions import PresentationError
from presentation.services.elaborate import elaborate
from presentation.services.parser import parse_presentation
from presentation.services.structures import HopfTriplet

logger = logging.getLogger(__name__)

PRESETS_PREFIX = 'presets/'


def presets_dir() -> Path:
    default = Path(__file__).resolve().parent.parent / 'presets'
    return Path(getattr(settings, 'HOPFKIT_PRESETS_DIR', default))


def resolve_path(path: str) -> Path:
    candidate = Path(path)
    if candidate.exists():
        return candidate
    if path.startswith(PRESETS_PREFIX):
        shipped = presets_dir() / path[len(PRESETS_PREFIX):]
        if shipped.exists():
            return shipped
    named = presets_dir() / f'{path}.hopf'
    if named.exists():
        return named
    raise PresentationError(f'Presentation file not found: {path}')


def read_source(path: str) -> str:
    resolved = resolve_path(path)
    try:
        return resolved.read_text(encoding='utf-8')
    except OSError as exc:
        raise PresentationError(f'Cannot read {resolved}: {exc}') from exc


@lru_cache(maxsize=32)
def load_presentation(path: str, degree: int, zorder: int) -> HopfTriplet:
    """Parse and elaborate a file, cached per (path, D, Z)."""
    logger.debug(f'Loading {path} at D={degree}, Z={zorder}')
    return elaborate(parse_presentation(read_source(path)), degree, zorder)
