"""Exact invariants of singular curves built by gluing points of smooth curves over finite fields."""

__version__ = "0.1.0"
