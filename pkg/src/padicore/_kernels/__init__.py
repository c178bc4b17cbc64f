"""Kernel selection: compiled extension when available, pure Python otherwise.

Both backends expose ``convolve_mod`` and ``compose_mod`` with identical
contracts; ``BACKEND`` names the one in use.  ``get_backend`` returns a
specific implementation by name, which the benchmark and the equivalence
tests use to compare the two.
"""

import os

from padicore._kernels import pyseries as _pure

if os.environ.get("PADICORE_PURE_KERNELS"):
    _impl = _pure
else:
    try:
        from padicore import _fastseries as _impl
    except ImportError:  # extension not built; fall back
        _impl = _pure

BACKEND = _impl.BACKEND
convolve_mod = _impl.convolve_mod
compose_mod = _impl.compose_mod


def get_backend(name):
    """Return the kernel module named "pure" or "compiled"."""
    if name == "pure":
        return _pure
    if name == "compiled":
        from padicore import _fastseries

        return _fastseries
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    names = ["pure"]
    try:
        from padicore import _fastseries  # noqa: F401

        names.append("compiled")
    except ImportError:
        pass
    return names
