"""
Minimal Django settings for running the commands without a host project.
"""

import logging

import django
from django.apps import apps
from django.conf import settings

from arof_ttd.log import set_log_record_factory

LOG_FORMAT = "%(levelname)s %(name)s [%(arof_scenario)s:%(arof_stage)s] %(message)s"


def boot_standalone(log_level: str = "WARNING"):
    """
    Configure settings when no DJANGO_SETTINGS_MODULE is in use, then set up Django.
    Calling it twice is harmless.
    """
    if not settings.configured:
        settings.configure(
            DEBUG=False,
            INSTALLED_APPS=(
                "rest_framework",
                "arof_ttd",
            ),
            USE_TZ=True,
            LOGGING={
                "version": 1,
                "disable_existing_loggers": False,
                "formatters": {
                    "stage": {"format": LOG_FORMAT},
                },
                "handlers": {
                    "console": {
                        "class": "logging.StreamHandler",
                        "formatter": "stage",
                    },
                },
                "loggers": {
                    "arof_ttd": {
                        "handlers": ["console"],
                        "level": log_level,
                        "propagate": False,
                    },
                },
            },
        )
        django.setup()
        set_log_record_factory()
        logging.getLogger("arof_ttd").debug("Standalone settings configured")
    elif not apps.ready:
        django.setup()
