"""Mutation-scan kernel with backend selection at import.

Prefers the compiled Cython extension; falls back to the numpy implementation
when the extension was not built. Both backends are importable directly for
the backend-equivalence tests and the benchmark.
"""

from . import _mutscan_py

try:
    from ._mutscan import scan_mutants

    KERNEL_BACKEND = "compiled"
except ImportError:  # extension not built
    scan_mutants = _mutscan_py.scan_mutants
    KERNEL_BACKEND = "python"

scan_mutants_py = _mutscan_py.scan_mutants

__all__ = ["scan_mutants", "scan_mutants_py", "KERNEL_BACKEND"]
