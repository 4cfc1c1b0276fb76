"""
`arof-ttd` console script: the simulator management commands without a host project.

    arof-ttd chain --config reference
    arof-ttd sweep --config chirp_sweep --out chirp_sweep.csv
    arof-ttd cost --services 6 --elements 4
"""

import os
import sys

from django.core.management import execute_from_command_line

from arof_ttd.utils.standalone import boot_standalone


def main(argv=None):
    argv = list(sys.argv if argv is None else argv)
    if "DJANGO_SETTINGS_MODULE" not in os.environ:
        boot_standalone()
    execute_from_command_line(argv)


if __name__ == "__main__":
    main()
