"""Coloring documents, text exports and bounds tables."""
