"""Exact stability, walls and chambers of weighted point configurations."""

__version__ = "20261017"
