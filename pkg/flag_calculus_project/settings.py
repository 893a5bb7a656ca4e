"""
Django settings for flag_calculus_project project.

Generated by 'django-admin startproject' using Django 5.2.

The project has no web front end; Django supplies the management-command
runner, the ORM behind the structure-table cache and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Optional .env next to manage.py; real environment variables win.
load_dotenv(BASE_DIR / '.env', override=False)


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-flag-calculus-local-only')

DEBUG = os.getenv('DJANGO_DEBUG', 'False').lower() in ('1', 'true', 'yes')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Local apps
    'schubert_app',  # Schubert calculus engine and table cache

    # Third-party apps
    'rest_framework',
]

MIDDLEWARE = []


# Cache directory and window guard (environment overrides the defaults;
# command-line flags override both)

SCHUBERT_CACHE_DIR = Path(os.getenv('SCHUBERT_CACHE_DIR', BASE_DIR / 'cache'))
SCHUBERT_MAX_WINDOW = int(os.getenv('SCHUBERT_MAX_WINDOW', '6'))


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    },
    'tables': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': SCHUBERT_CACHE_DIR / 'schubert_tables.sqlite3',
    },
}

# Structure tables live in their own database
DATABASE_ROUTERS = ['flag_calculus_project.db_router.TablesRouter']


# Engine defaults, read through schubert_app.conf.engine_setting

SCHUBERT_CALC = {
    'product_route': os.getenv('SCHUBERT_PRODUCT_ROUTE', 'reduced'),
    'grothendieck_degree_factor': 2,  # cap = factor * window**2
    'ambient_cap': 12,
    'reduced_word_limit': 10_000,
    'cone_fit_window': 6,
    'cone_check_points': 5,
    'cone_retry_cap': 4,
    'random_seed': 20240601,
    'sample_count': 100,
    'sample_triples': 10_000,
}


# Logging

SCHUBERT_LOG_LEVEL = os.getenv('SCHUBERT_LOG_LEVEL', 'INFO').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'schubert_app': {
            'handlers': ['console'],
            'level': SCHUBERT_LOG_LEVEL,
            'propagate': False,
        },
    },
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# DRF is used for serializers only
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}
