#!/usr/bin/env python3
"""Run the full acceptance campaign and print one line per criterion.

Thin wrapper around the pytest acceptance module so the campaign can be
launched directly without remembering pytest flags.
"""

import sys

import pytest

if __name__ == "__main__":
    sys.exit(pytest.main(["-q", "tests/test_acceptance.py"] + sys.argv[1:]))
