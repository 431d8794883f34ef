"""Exact verification toolkit for simple-current extensions, minimal reductions and free-field identities."""

__version__ = "0.1.0"
