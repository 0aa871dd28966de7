"""
Base class of the commands that work on one presentation file.

Exit codes: 0 on success, 1 when a verification fails, 2 on parse,
elaboration and usage errors.
"""
from __future__ import annotations

import logging

from django.core.management.base import BaseCommand, CommandError

from cli.services.config import FORMATS, RunConfig
from presentation.services.loader import load_presentation
from presentation.services.structures import HopfTriplet

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
VERIFICATION_FAILED = 1


class PresentationCommand(BaseCommand):
    """Loads ``path`` at (--degree, --zorder) and hands the triplet to ``run``."""

    uses_seed = False

    def add_arguments(self, parser):
        parser.add_argument('path', help='Presentation file, or presets/<name>.hopf')
        parser.add_argument('--degree', type=int, help='Generator degree bound D')
        parser.add_argument('--zorder', type=int, help='Parameter order Z')
        parser.add_argument('--format', choices=FORMATS, default='text', help='Output format')
        if self.uses_seed:
            parser.add_argument('--seed', type=int, help='Seed of the randomized property suites')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        config = RunConfig.from_options(options)
        try:
            triplet = load_presentation(config.path, config.degree, config.zorder)
            self.run(triplet, config, **options)
        except CommandError:
            raise
        except ValueError as exc:
            logger.error(f'{self.__module__.rsplit(".", 1)[-1]} on {config.path} failed: {exc}')
            raise CommandError(str(exc), returncode=USAGE_ERROR) from exc

    def run(self, triplet: HopfTriplet, config: RunConfig, **options):
        raise NotImplementedError('subclasses of PresentationCommand must provide a run() method')
