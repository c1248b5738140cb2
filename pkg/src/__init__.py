"""Interval edge colorings of complete k-partite graphs."""
