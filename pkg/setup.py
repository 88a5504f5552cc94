"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so any failure here downgrades to a pure-Python install
instead of aborting.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/wavesum/wavelet/_kernels_cy.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
    for ext in ext_modules:
        # fp-contract must stay off: the compiled kernels are required to be
        # bitwise identical to the NumPy fallback.
        ext.extra_compile_args = ["-O3", "-ffp-contract=off"]
        ext.include_dirs = [numpy.get_include()]
except ImportError as exc:  # pragma: no cover - exercised only on minimal hosts
    sys.stderr.write(f"wavesum: building without compiled kernels ({exc})\n")

setup(ext_modules=ext_modules)
