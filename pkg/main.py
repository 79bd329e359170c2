"""
Fuzzy Contrast - command-line entry point.

Evolves a fuzzy-logic intensity transformation per image with Hill Climbing
and Genetic Algorithm variants. See `src/cli.py` for the subcommands.
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
