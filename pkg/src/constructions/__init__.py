"""Interval coloring constructions."""
