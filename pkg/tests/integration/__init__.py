"""Integration tests for polya-groups.

Desk-scale sweeps over real ranges (seconds to a minute each); the 10^5
sweeps are additionally marked slow.

Run with: poetry run pytest -m integration
"""
