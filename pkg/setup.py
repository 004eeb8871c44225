"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set PZDYN_NO_EXT=1 to skip the
build entirely.

FP contraction is disabled so the compiled kernels stay bit-identical
to the pure-Python reference loops.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PZDYN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "pzdyn._kernels._core",
                    ["src/pzdyn/_kernels/_core.pyx"],
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
