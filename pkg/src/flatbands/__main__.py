"""Entry point for `python -m flatbands`."""

import sys

from .cli import main

sys.exit(main())
