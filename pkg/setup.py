import os
from pathlib import Path

from setuptools import Extension, setup

ext_modules = []
pyx = Path(__file__).parent / "src" / "padicore" / "_fastseries.pyx"
if not os.environ.get("PADICORE_PURE") and pyx.exists():
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "padicore._fastseries",
                    [str(pyx.relative_to(Path(__file__).parent))],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython: install with the pure-Python kernels only.
        ext_modules = []

setup(ext_modules=ext_modules)
