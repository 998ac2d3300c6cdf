"""Pasting diagrams over directed hypergraphs: cells, axioms and translations."""

__version__ = "0.1.0"
