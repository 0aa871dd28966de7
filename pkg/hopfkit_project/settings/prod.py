"""
Batch settings for the hopfkit project (long verification runs, CI).
"""

from .base import *
import os

DEBUG = False

# Larger presets need a bigger rewrite budget than interactive runs
HOPFKIT_REWRITE_STEP_BUDGET = int(os.getenv('HOPFKIT_REWRITE_STEP_BUDGET', '5000000'))
