"""Exhaustive backtracking oracle."""
