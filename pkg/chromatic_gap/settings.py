"""
Django settings for chromatic_gap project.

The project has no web surface: it runs the graph laboratory through
management commands and keeps recorded sweeps in the database.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv("SECRET_KEY", "chromatic-gap-local-only")

DEBUG = os.getenv("DEBUG", "False") == "True"


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    # Third party apps
    "rest_framework",
    # Local apps
    "core",
    "extremal",
]


# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    "default": {
        "ENGINE": os.getenv("DB_ENGINE", "django.db.backends.sqlite3"),
        "NAME": os.getenv("DB_NAME", str(BASE_DIR / "sweeps.sqlite3")),
        "USER": os.getenv("DB_USER", ""),
        "PASSWORD": os.getenv("DB_PASSWORD", ""),
        "HOST": os.getenv("DB_HOST", ""),
        "PORT": os.getenv("DB_PORT", ""),
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Graph laboratory settings
GRAPH_LAB = {
    # 0 means one worker per available CPU
    "DEFAULT_JOBS": int(os.getenv("GRAPH_LAB_JOBS", "0")),
    "DEFAULT_SEED": int(os.getenv("GRAPH_LAB_SEED", "2024")),
    "DEFAULT_TRIALS": int(os.getenv("GRAPH_LAB_TRIALS", "200")),
    "DECORATED_MAX_VERTICES": min(int(os.getenv("GRAPH_LAB_MAX_VERTICES", "20")), 20),
    "LEMMA_MAX_N": 6,
    "CHUNK_SIZE": int(os.getenv("GRAPH_LAB_CHUNK_SIZE", "4096")),
}

# Logging goes to stderr; stdout carries command results only
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "core": {
            "handlers": ["console"],
            "level": os.getenv("LOG_LEVEL", "WARNING"),
        },
        "extremal": {
            "handlers": ["console"],
            "level": os.getenv("LOG_LEVEL", "WARNING"),
        },
    },
}
