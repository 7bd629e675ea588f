"""Exact Demazure weight multiplicities via Demazure operators and Macdonald limits."""

__version__ = "0.1.0"
