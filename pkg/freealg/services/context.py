from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from freealg.exceptions import AlgebraError


@dataclass(frozen=True)
class TruncationContext:
    """
    Run-level truncation: generator degree D and parameter order Z.

    Internal arithmetic runs at ``working_degree`` (D plus a guard) so that
    degree-lowering rewrites cannot leak truncation error into degree <= D.
    """

    degree: int
    zorder: int
    guard: Optional[int] = None

    def __post_init__(self):
        if self.degree < 0:
            raise AlgebraError(f'Degree bound must be non-negative, got {self.degree}')
        if self.zorder < 0:
            raise AlgebraError(f'Parameter order must be non-negative, got {self.zorder}')

    @classmethod
    def create(cls, degree: int, zorder: int, guard: Optional[int] = None) -> 'TruncationContext':
        """Build a context, taking the guard from settings when not given."""
        if guard is None:
            guard = getattr(settings, 'HOPFKIT_DEGREE_GUARD', None)
        return cls(degree=degree, zorder=zorder, guard=guard)

    @property
    def guard_size(self) -> int:
        return self.guard if self.guard is not None else self.zorder + 2

    @property
    def working_degree(self) -> int:
        return self.degree + self.guard_size

    def with_zorder(self, zorder: int) -> 'TruncationContext':
        """Same degree and guard size, different parameter order."""
        return TruncationContext(self.degree, zorder, self.guard_size)

    def with_degree(self, degree: int) -> 'TruncationContext':
        return TruncationContext(degree, self.zorder, self.guard)
