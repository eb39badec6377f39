#!/usr/bin/env python3
"""Hexagonal-grid isoperimetry runner.

Thin wrapper around ``hexiso.cli`` for use from a source checkout::

    python run_hexiso.py grid --radius 3
    python run_hexiso.py --threads 8 check --family connected --max-size 12
"""

import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent / "src"))

# Load environment variables before the CLI resolves its defaults
from dotenv import load_dotenv  # noqa: E402

load_dotenv()

from hexiso.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
