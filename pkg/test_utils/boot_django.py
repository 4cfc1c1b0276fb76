# File sets up the django environment, used by other scripts that need to
# execute in django land
import os
import sys

import django
from django.conf import settings

BASE_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))

sys.path.append(BASE_DIR)


def boot_django():
    if settings.configured:
        return
    settings.configure(
        BASE_DIR=BASE_DIR,
        DEBUG=True,
        AROF_TTD={
            # INFO - sweeps in tests run sequentially unless a test overrides it
            "SWEEP_MAX_WORKERS": 1,
        },
        INSTALLED_APPS=(
            "rest_framework",
            "arof_ttd",
        ),
        TIME_ZONE="UTC",
        USE_TZ=True,
    )
    django.setup()
