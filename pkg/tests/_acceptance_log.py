"""Shared registry for acceptance verdict lines.

The acceptance tests append one line per criterion here; the conftest
terminal-summary hook prints the collected lines after capture ends, so
they appear in plain ``pytest -v`` output.
"""

LINES: list[str] = []
