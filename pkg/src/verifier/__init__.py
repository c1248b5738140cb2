"""Interval coloring verification."""
