"""
Development settings for the hopfkit project.
"""

from .base import *

DEBUG = True

# Per-item rewriting and solver detail while developing presentations
LOGGING['loggers']['induce']['level'] = 'DEBUG'
