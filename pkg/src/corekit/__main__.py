"""Allow `python -m corekit ...` as an alias for the corekit script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
