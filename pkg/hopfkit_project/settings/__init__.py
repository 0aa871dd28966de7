"""
Default project settings when DJANGO_SETTINGS_MODULE is ``hopfkit_project.settings``.

For isolated tests use ``--settings=hopfkit_project.settings.test``.
"""

from .dev import *
