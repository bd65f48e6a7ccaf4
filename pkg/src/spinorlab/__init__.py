"""Exact verification toolkit for linear sections of the spinor tenfold."""

__version__ = "0.1.0"
DATA_VERSION = "printed-tables/1"
