"""
Top-level application package for the jagged partitions toolkit.

Exact enumeration, counting and q-series verification, served over HTTP
(``app.main``) and from the command line (``app.cli``).
"""

__all__ = [
    "__version__",
]

__version__ = "0.1.0"
