"""
Django settings for the hopfkit project.

The project has no web surface: it is a set of service apps driven through
management commands (``python manage.py verify ...``).
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'hopfkit-local-only')

DEBUG = os.getenv('DJANGO_DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',

    # Engine apps, bottom-up
    'scalars',
    'freealg',
    'presentation',
    'hopf',
    'modact',
    'induce',
    'cli',
]

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('HOPFKIT_DB_PATH', str(BASE_DIR / 'db.sqlite3')),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = True


# Engine configuration
HOPFKIT_DEFAULT_DEGREE = int(os.getenv('HOPFKIT_DEFAULT_DEGREE', '4'))
HOPFKIT_DEFAULT_ZORDER = int(os.getenv('HOPFKIT_DEFAULT_ZORDER', '4'))
HOPFKIT_REWRITE_STEP_BUDGET = int(os.getenv('HOPFKIT_REWRITE_STEP_BUDGET', '1000000'))
HOPFKIT_PRODUCT_CACHE_SIZE = int(os.getenv('HOPFKIT_PRODUCT_CACHE_SIZE', '500000'))
# Unset means "parameter order + 2"
HOPFKIT_DEGREE_GUARD = int(os.getenv('HOPFKIT_DEGREE_GUARD')) if os.getenv('HOPFKIT_DEGREE_GUARD') else None
HOPFKIT_PROPERTY_CASES = int(os.getenv('HOPFKIT_PROPERTY_CASES', '100'))
HOPFKIT_PRESETS_DIR = os.getenv('HOPFKIT_PRESETS_DIR', str(BASE_DIR / 'presentation' / 'presets'))

HOPFKIT_LOG_LEVEL = os.getenv('HOPFKIT_LOG_LEVEL', 'INFO').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
        'scalars': {
            'handlers': ['console'],
            'level': HOPFKIT_LOG_LEVEL,
            'propagate': False,
        },
        'freealg': {
            'handlers': ['console'],
            'level': HOPFKIT_LOG_LEVEL,
            'propagate': False,
        },
        'presentation': {
            'handlers': ['console'],
            'level': HOPFKIT_LOG_LEVEL,
            'propagate': False,
        },
        'hopf': {
            'handlers': ['console'],
            'level': HOPFKIT_LOG_LEVEL,
            'propagate': False,
        },
        'modact': {
            'handlers': ['console'],
            'level': HOPFKIT_LOG_LEVEL,
            'propagate': False,
        },
        'induce': {
            'handlers': ['console'],
            'level': HOPFKIT_LOG_LEVEL,
            'propagate': False,
        },
        'cli': {
            'handlers': ['console'],
            'level': HOPFKIT_LOG_LEVEL,
            'propagate': False,
        },
    },
}
