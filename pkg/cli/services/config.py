"""
Run-level options shared by every command.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from django.conf import settings
from django.core.management.base import CommandError

FORMATS = ('text', 'json')


@dataclass(frozen=True)
class RunConfig:
    path: str
    degree: int
    zorder: int
    output_format: str = 'text'
    seed: Optional[int] = None

    def __post_init__(self):
        if self.degree < 1:
            raise CommandError(f'--degree must be at least 1, got {self.degree}', returncode=2)
        if self.zorder < 0:
            raise CommandError(f'--zorder must be non-negative, got {self.zorder}', returncode=2)
        if self.output_format not in FORMATS:
            raise CommandError(f'Unknown --format {self.output_format!r}', returncode=2)

    @classmethod
    def from_options(cls, options: dict) -> 'RunConfig':
        """Command options, falling back to HOPFKIT_DEFAULT_DEGREE / HOPFKIT_DEFAULT_ZORDER."""
        degree = options.get('degree')
        zorder = options.get('zorder')
        return cls(
            path=options['path'],
            degree=getattr(settings, 'HOPFKIT_DEFAULT_DEGREE', 4) if degree is None else degree,
            zorder=getattr(settings, 'HOPFKIT_DEFAULT_ZORDER', 4) if zorder is None else zorder,
            output_format=options.get('format') or 'text',
            seed=options.get('seed'),
        )

    @property
    def is_json(self) -> bool:
        return self.output_format == 'json'
