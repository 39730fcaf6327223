"""Build script for the compiled search kernels.

The package works without the extension: immergraph._kernels falls back to
the pure Python implementation when the compiled module is unavailable.
"""

import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None and os.path.exists("src/immergraph/_speedups.pyx"):
    extensions = cythonize(
        [
            Extension(
                "immergraph._speedups",
                ["src/immergraph/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
            "embedsignature": True,
        },
    )

setup(ext_modules=extensions)
