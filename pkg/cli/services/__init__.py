from cli.services.base import PresentationCommand
from cli.services.config import RunConfig

__all__ = ['PresentationCommand', 'RunConfig']
