"""Entry point for the ``simplicial`` console script and ``python -m simplicialcentrality``.

    simplicial build --input edges.txt --out results/
    simplicial filtrate --input edges.txt --measure gcc --thresholds auto
"""

import os
import sys


def main(argv=None):
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "simplicialcentrality.settings")
    from django.core.management import execute_from_command_line

    argv = list(sys.argv if argv is None else argv)
    if len(argv) < 2:
        argv.append("help")
    execute_from_command_line(argv)


if __name__ == "__main__":
    main()
