"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time); set TOURNCOUNT_NO_EXT=1 to skip compiling it.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TOURNCOUNT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "tourncount._kernels_cy",
                    sources=["src/tourncount/_kernels_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
