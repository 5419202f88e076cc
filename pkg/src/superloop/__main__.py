"""Module entry point: ``python -m superloop``."""

import sys

from .cli import main

sys.exit(main())
